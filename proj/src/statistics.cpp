#include "shufcompat/statistics.hpp"

#include <stdexcept>

namespace shufcompat {

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("statistic overflow");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("statistic overflow");
    return r;
}

long long set_sum(const IntSet& s) {
    long long acc = 0;
    for (int x : s) acc = checked_add(acc, x);
    return acc;
}

long long comaj_of(int n, const IntSet& des) {
    long long acc = 0;
    for (int k : des) acc = checked_add(acc, static_cast<long long>(n) - k);
    return acc;
}

// Letter at 1-based position i with 0 outside [1, n].
int padded(const Permutation& pi, int i) {
    if (i < 1 || i > static_cast<int>(pi.size())) return 0;
    return pi.at(static_cast<std::size_t>(i));
}

bool peak_at(const Permutation& pi, int i) {
    return padded(pi, i - 1) < padded(pi, i) && padded(pi, i) > padded(pi, i + 1);
}

// Statistic from the pair (n, Des); shared by stat_on_comp.
StatValue from_descents(StatTag tag, int n, const IntSet& d) {
    switch (tag) {
        case StatTag::Des: return d;
        case StatTag::Comp: return comp_of_set(n, d);
        case StatTag::des: return static_cast<long long>(d.size());
        case StatTag::maj: return set_sum(d);
        case StatTag::comaj: return comaj_of(n, d);
        case StatTag::DesMaj: return std::make_pair(static_cast<long long>(d.size()), set_sum(d));
        case StatTag::Pk: {
            IntSet out;
            for (int i : d)
                if (i >= 2 && !d.contains(i - 1)) out.insert(i);
            return out;
        }
        case StatTag::Lpk: {
            IntSet out;
            for (int i : d)
                if (!d.contains(i - 1)) out.insert(i);
            return out;
        }
        case StatTag::Rpk: {
            IntSet out;
            for (int i : d)
                if (i >= 2 && !d.contains(i - 1)) out.insert(i);
            if (n >= 2 && !d.contains(n - 1)) out.insert(n);
            return out;
        }
        case StatTag::Epk: {
            if (n == 0) return IntSet{};
            IntSet with_n = d;
            with_n.insert(n);
            return set_difference(with_n, shift(d, 1));
        }
        case StatTag::inv: break;
    }
    throw std::invalid_argument("inv is not a descent statistic");
}

}  // namespace

std::string_view stat_name(StatTag tag) {
    switch (tag) {
        case StatTag::Des: return "Des";
        case StatTag::Pk: return "Pk";
        case StatTag::Lpk: return "Lpk";
        case StatTag::Rpk: return "Rpk";
        case StatTag::Epk: return "Epk";
        case StatTag::Comp: return "Comp";
        case StatTag::des: return "des";
        case StatTag::maj: return "maj";
        case StatTag::comaj: return "comaj";
        case StatTag::DesMaj: return "desmaj";
        case StatTag::inv: return "inv";
    }
    return "?";
}

std::optional<StatTag> parse_stat(std::string_view name) {
    for (StatTag t : kAllStats)
        if (stat_name(t) == name) return t;
    if (name == "DesMaj" || name == "(des,maj)") return StatTag::DesMaj;
    return std::nullopt;
}

bool is_descent_statistic(StatTag tag) { return tag != StatTag::inv; }

std::string to_string(const StatValue& v) {
    struct Visitor {
        std::string operator()(long long x) const { return std::to_string(x); }
        std::string operator()(const IntSet& s) const { return s.to_string(); }
        std::string operator()(const Composition& c) const { return c.to_string(); }
        std::string operator()(const std::pair<long long, long long>& p) const {
            return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
        }
    };
    return std::visit(Visitor{}, v);
}

IntSet descent_set(const Permutation& pi) {
    IntSet out;
    for (std::size_t i = 1; i < pi.size(); ++i)
        if (pi.at(i) > pi.at(i + 1)) out.insert(static_cast<int>(i));
    return out;
}

IntSet peak_set(const Permutation& pi) {
    IntSet out;
    const int n = static_cast<int>(pi.size());
    for (int i = 2; i <= n - 1; ++i)
        if (peak_at(pi, i)) out.insert(i);
    return out;
}

IntSet left_peak_set(const Permutation& pi) {
    IntSet out;
    const int n = static_cast<int>(pi.size());
    for (int i = 1; i <= n - 1; ++i)
        if (peak_at(pi, i)) out.insert(i);
    return out;
}

IntSet right_peak_set(const Permutation& pi) {
    IntSet out;
    const int n = static_cast<int>(pi.size());
    for (int i = 2; i <= n; ++i)
        if (peak_at(pi, i)) out.insert(i);
    return out;
}

IntSet exterior_peak_set(const Permutation& pi) {
    IntSet out;
    const int n = static_cast<int>(pi.size());
    for (int i = 1; i <= n; ++i)
        if (peak_at(pi, i)) out.insert(i);
    return out;
}

long long inversions(const Permutation& pi) {
    long long count = 0;
    for (std::size_t i = 0; i < pi.size(); ++i)
        for (std::size_t j = i + 1; j < pi.size(); ++j)
            if (pi[i] > pi[j]) count = checked_add(count, 1);
    return count;
}

StatValue statistic(StatTag tag, const Permutation& pi) {
    const int n = static_cast<int>(pi.size());
    switch (tag) {
        case StatTag::Des: return descent_set(pi);
        case StatTag::Pk: return peak_set(pi);
        case StatTag::Lpk: return left_peak_set(pi);
        case StatTag::Rpk: return right_peak_set(pi);
        case StatTag::Epk: return exterior_peak_set(pi);
        case StatTag::Comp: return comp_of_perm(pi);
        case StatTag::des: return static_cast<long long>(descent_set(pi).size());
        case StatTag::maj: return set_sum(descent_set(pi));
        case StatTag::comaj: return comaj_of(n, descent_set(pi));
        case StatTag::DesMaj: {
            const IntSet d = descent_set(pi);
            return std::make_pair(static_cast<long long>(d.size()), set_sum(d));
        }
        case StatTag::inv: return inversions(pi);
    }
    throw std::logic_error("unknown statistic");
}

IntSet epk_via_des(const Permutation& pi) {
    if (pi.empty()) throw PermutationError("epk_via_des: empty permutation");
    const IntSet d = descent_set(pi);
    IntSet with_n = d;
    with_n.insert(static_cast<int>(pi.size()));
    return set_difference(with_n, shift(d, 1));
}

Composition comp_of_perm(const Permutation& pi) {
    return comp_of_set(static_cast<int>(pi.size()), descent_set(pi));
}

StatValue stat_on_comp(StatTag tag, const Composition& c) {
    if (tag == StatTag::inv) throw std::invalid_argument("inv is not a descent statistic");
    return from_descents(tag, c.size(), des_of_comp(c));
}

bool st_equivalent(StatTag tag, const Composition& j, const Composition& k) {
    return j.size() == k.size() && stat_on_comp(tag, j) == stat_on_comp(tag, k);
}

namespace {

void check_concat_args(StatTag tag, const Composition& a, const Composition& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("concatenation formula needs nonempty A and B");
    switch (tag) {
        case StatTag::Epk:
        case StatTag::des:
        case StatTag::maj:
        case StatTag::Lpk:
        case StatTag::Rpk:
        case StatTag::Pk: return;
        default: throw std::invalid_argument("no concatenation formula for this statistic");
    }
}

const IntSet& as_set(const StatValue& v) { return std::get<IntSet>(v); }
long long as_int(const StatValue& v) { return std::get<long long>(v); }

}  // namespace

StatValue stat_of_concat(StatTag tag, const Composition& a, const Composition& b) {
    check_concat_args(tag, a, b);
    const int n = a.size();
    const StatValue sa = stat_on_comp(tag, a), sb = stat_on_comp(tag, b);
    const IntSet da = des_of_comp(a), db = des_of_comp(b);
    switch (tag) {
        case StatTag::Epk: {
            IntSet moved = shift(as_set(sb), n);
            moved.erase(n + 1);
            return set_union(as_set(sa), moved);
        }
        case StatTag::des: return checked_add(checked_add(as_int(sa), as_int(sb)), 1);
        case StatTag::maj:
            return checked_add(checked_add(as_int(sa), as_int(sb)),
                               checked_mul(n, static_cast<long long>(db.size()) + 1));
        case StatTag::Lpk: {
            IntSet moved = shift(as_set(sb), n);
            moved.erase(n + 1);
            IntSet out = set_union(as_set(sa), moved);
            if (!da.contains(n - 1)) out.insert(n);
            return out;
        }
        case StatTag::Rpk: return set_union(as_set(sa), shift(as_set(sb), n));
        case StatTag::Pk: {
            IntSet out = set_union(as_set(sa), shift(as_set(sb), n));
            if (!da.contains(n - 1) && n > 1) out.insert(n);
            return out;
        }
        default: break;
    }
    throw std::logic_error("unreachable");
}

StatValue stat_of_near_concat(StatTag tag, const Composition& a, const Composition& b) {
    check_concat_args(tag, a, b);
    const int n = a.size();
    const int m = b.size();
    const StatValue sa = stat_on_comp(tag, a), sb = stat_on_comp(tag, b);
    const IntSet db = des_of_comp(b);
    switch (tag) {
        case StatTag::Epk: {
            IntSet left = as_set(sa);
            left.erase(n);
            return set_union(left, shift(as_set(sb), n));
        }
        case StatTag::des: return checked_add(as_int(sa), as_int(sb));
        case StatTag::maj:
            return checked_add(checked_add(as_int(sa), as_int(sb)),
                               checked_mul(n, static_cast<long long>(db.size())));
        case StatTag::Lpk: return set_union(as_set(sa), shift(as_set(sb), n));
        case StatTag::Rpk: {
            IntSet left = as_set(sa);
            left.erase(n);
            IntSet out = set_union(left, shift(as_set(sb), n));
            if (db.contains(1) || m == 1) out.insert(n + 1);
            return out;
        }
        case StatTag::Pk: {
            IntSet out = set_union(as_set(sa), shift(as_set(sb), n));
            if (db.contains(1)) out.insert(n + 1);
            return out;
        }
        default: break;
    }
    throw std::logic_error("unreachable");
}

}  // namespace shufcompat
