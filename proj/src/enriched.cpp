#include "shufcompat/enriched.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "shufcompat/lacunar.hpp"
#include "shufcompat/linalg.hpp"
#include "shufcompat/shuffle.hpp"
#include "shufcompat/statistics.hpp"

namespace shufcompat {

std::string_view preset_name(AlphabetPreset p) {
    switch (p) {
        case AlphabetPreset::ordinary: return "ordinary";
        case AlphabetPreset::stembridge: return "stembridge";
        case AlphabetPreset::petersen: return "petersen";
        case AlphabetPreset::epk: return "epk";
    }
    return "?";
}

std::optional<AlphabetPreset> parse_preset(std::string_view s) {
    for (auto p : {AlphabetPreset::ordinary, AlphabetPreset::stembridge, AlphabetPreset::petersen,
                   AlphabetPreset::epk})
        if (preset_name(p) == s) return p;
    return std::nullopt;
}

std::string ZLetter::to_string() const {
    std::string v = value == kInfinity ? "inf" : std::to_string(value);
    return (positive ? "+" : "-") + v;
}

AlphabetSpec AlphabetSpec::make(AlphabetPreset preset, int value_cap) {
    if (value_cap < 0) throw std::invalid_argument("alphabet: negative value cap");
    AlphabetSpec s;
    s.preset = preset;
    s.value_cap = value_cap;
    s.has_bottom_zero = preset == AlphabetPreset::petersen || preset == AlphabetPreset::epk;
    s.has_top_infinity = preset == AlphabetPreset::epk;
    return s;
}

bool AlphabetSpec::allows(const ZLetter& z) const {
    if (z.value == kInfinity) return has_top_infinity && !z.positive;
    if (z.value == 0) return has_bottom_zero && z.positive;
    if (z.value < 0 || z.value > value_cap) return false;
    return z.positive || preset != AlphabetPreset::ordinary;
}

std::vector<ZLetter> AlphabetSpec::letters() const {
    std::vector<ZLetter> out;
    if (has_bottom_zero) out.push_back({0, true});
    for (int v = 1; v <= value_cap; ++v) {
        if (preset != AlphabetPreset::ordinary) out.push_back({v, false});
        out.push_back({v, true});
    }
    if (has_top_infinity) out.push_back({kInfinity, false});
    return out;
}

LabeledPoset make_poset(int size, std::vector<std::pair<int, int>> covers, std::vector<int> labels) {
    if (size < 0) throw std::invalid_argument("poset: negative size");
    if (static_cast<int>(labels.size()) != size) throw std::invalid_argument("poset: one label per element required");
    std::set<int> seen;
    for (int l : labels)
        if (!seen.insert(l).second) throw std::invalid_argument("poset: labels must be injective");
    LabeledPoset p;
    p.size = size;
    p.less.assign(size, std::vector<bool>(size, false));
    for (auto [x, y] : covers) {
        if (x < 0 || y < 0 || x >= size || y >= size) throw std::invalid_argument("poset: cover out of range");
        p.less[x][y] = true;
    }
    for (int k = 0; k < size; ++k)
        for (int i = 0; i < size; ++i)
            if (p.less[i][k])
                for (int j = 0; j < size; ++j)
                    if (p.less[k][j]) p.less[i][j] = true;
    for (int i = 0; i < size; ++i)
        if (p.less[i][i]) throw std::invalid_argument("poset: cover relation has a cycle");
    p.covers = std::move(covers);
    p.labels = std::move(labels);
    return p;
}

LabeledPoset chain_poset(const Permutation& pi) {
    int n = static_cast<int>(pi.size());
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    return make_poset(n, std::move(covers), pi.letters());
}

LabeledPoset disjoint_union(const LabeledPoset& p, const LabeledPoset& q) {
    auto covers = p.covers;
    for (auto [x, y] : q.covers) covers.emplace_back(x + p.size, y + p.size);
    auto labels = p.labels;
    labels.insert(labels.end(), q.labels.begin(), q.labels.end());
    return make_poset(p.size + q.size, std::move(covers), std::move(labels));
}

namespace {

void extend(const LabeledPoset& p, std::vector<int>& prefix, std::vector<bool>& used,
            std::vector<std::vector<int>>& out) {
    if (static_cast<int>(prefix.size()) == p.size) {
        out.push_back(prefix);
        return;
    }
    for (int y = 0; y < p.size; ++y) {
        if (used[y]) continue;
        bool minimal = true;
        for (int x = 0; x < p.size && minimal; ++x)
            if (!used[x] && p.less[x][y]) minimal = false;
        if (!minimal) continue;
        used[y] = true;
        prefix.push_back(y);
        extend(p, prefix, used, out);
        prefix.pop_back();
        used[y] = false;
    }
}

// f(x) = a, f(y) = b with x < y.
bool compatible(const ZLetter& a, const ZLetter& b, int label_x, int label_y) {
    if (b < a) return false;
    if (a == b) return a.positive ? label_x < label_y : label_x > label_y;
    return true;
}

// DFS over elements in `order`, letters by index; `visit` sees letter indices per element.
template <class Visit>
void enriched_dfs(const LabeledPoset& p, const std::vector<ZLetter>& letters, const std::vector<int>& order,
                  std::size_t depth, std::vector<int>& choice, Visit& visit) {
    if (depth == order.size()) {
        visit(choice);
        return;
    }
    int y = order[depth];
    for (std::size_t li = 0; li < letters.size(); ++li) {
        bool ok = true;
        for (std::size_t d = 0; d < depth && ok; ++d) {
            int x = order[d];
            if (p.less[x][y])
                ok = compatible(letters[choice[x]], letters[li], p.labels[x], p.labels[y]);
            else if (p.less[y][x])
                ok = compatible(letters[li], letters[choice[x]], p.labels[y], p.labels[x]);
        }
        if (!ok) continue;
        choice[y] = static_cast<int>(li);
        enriched_dfs(p, letters, order, depth + 1, choice, visit);
    }
    choice[y] = -1;
}

// Runs the DFS with the first element's letter fixed to each value in turn,
// one branch per task, and hands results back in branch order.
template <class Acc, class MakeVisit, class Merge>
void run_enriched(const LabeledPoset& p, const AlphabetSpec& spec, Execution exec, MakeVisit make_visit,
                  Merge merge, Acc& total) {
    auto letters = spec.letters();
    if (p.size == 0) {
        std::vector<int> choice;
        auto visit = make_visit(total);
        visit(choice);
        return;
    }
    auto exts = linear_extensions(p);
    const std::vector<int>& order = exts.front();
    int first = order.front();
    int branches = static_cast<int>(letters.size());
    std::vector<Acc> parts(branches, total);
    auto body = [&](int b) {
        std::vector<int> choice(p.size, -1);
        choice[first] = b;
        auto visit = make_visit(parts[b]);
        enriched_dfs(p, letters, order, 1, choice, visit);
    };
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (int b = 0; b < branches; ++b) body(b);
    } else {
        for (int b = 0; b < branches; ++b) body(b);
    }
    for (auto& part : parts) merge(total, part);
}

}  // namespace

std::vector<std::vector<int>> linear_extensions(const LabeledPoset& p) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    std::vector<bool> used(p.size, false);
    extend(p, prefix, used, out);
    return out;
}

PowPoly::PowPoly(int value_cap) : cap_(value_cap) {
    if (value_cap < 0) throw std::invalid_argument("PowPoly: negative value cap");
}

int PowPoly::slot(int value) const {
    if (value == kInfinity) return cap_ + 1;
    if (value < 0 || value > cap_) throw std::out_of_range("PowPoly: value outside the cap");
    return value;
}

void PowPoly::add(const std::vector<int>& exponents, const Rational& coeff) {
    if (static_cast<int>(exponents.size()) != cap_ + 2)
        throw std::invalid_argument("PowPoly: exponent vector has the wrong length");
    if (coeff == 0) return;
    auto [it, fresh] = terms_.try_emplace(exponents, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void PowPoly::add_map(const GMap& g, const Rational& coeff) {
    std::vector<int> e(cap_ + 2, 0);
    for (int v : g) ++e[slot(v)];
    add(e, coeff);
}

PowPoly& PowPoly::operator+=(const PowPoly& o) {
    if (o.cap_ != cap_) throw std::invalid_argument("PowPoly: cap mismatch");
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

PowPoly& PowPoly::operator-=(const PowPoly& o) {
    if (o.cap_ != cap_) throw std::invalid_argument("PowPoly: cap mismatch");
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
}

PowPoly& PowPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

PowPoly operator*(const PowPoly& a, const PowPoly& b) {
    if (a.cap_ != b.cap_) throw std::invalid_argument("PowPoly: cap mismatch");
    PowPoly out(a.cap_);
    std::vector<int> e(a.cap_ + 2);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add(e, ca * cb);
        }
    return out;
}

PowPoly PowPoly::restrict_cap(int cap) const {
    if (cap > cap_) throw std::invalid_argument("PowPoly: restrict_cap can only lower the cap");
    PowPoly out(cap);
    for (const auto& [e, c] : terms_) {
        bool keep = true;
        for (int i = cap + 1; i <= cap_ && keep; ++i)
            if (e[i] != 0) keep = false;
        if (!keep) continue;
        std::vector<int> f(e.begin(), e.begin() + cap + 1);
        f.push_back(e.back());
        out.add(f, c);
    }
    return out;
}

std::string PowPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += shufcompat::to_string(c) + "*";
        for (int i = 0; i <= cap_ + 1; ++i) {
            if (i) out += ' ';
            out += (i == cap_ + 1 ? std::string("xinf") : "x" + std::to_string(i)) + "^" + std::to_string(e[i]);
        }
    }
    return out;
}

PowPoly PowPoly::parse(const std::string& text) {
    auto trimmed = text;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\n"));
    trimmed.erase(trimmed.find_last_not_of(" \t\n") + 1);
    if (trimmed == "0") return PowPoly(0);
    std::vector<std::string> chunks;
    std::size_t start = 0;
    while (true) {
        auto pos = trimmed.find(" + ", start);
        chunks.push_back(trimmed.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 3;
    }
    std::optional<PowPoly> out;
    for (const auto& chunk : chunks) {
        auto star = chunk.find('*');
        if (star == std::string::npos) throw std::invalid_argument("PowPoly: term without '*': " + chunk);
        Rational c = parse_rational(chunk.substr(0, star));
        std::istringstream in(chunk.substr(star + 1));
        std::vector<int> e;
        std::string factor;
        while (in >> factor) {
            auto caret = factor.find('^');
            if (caret == std::string::npos || factor[0] != 'x')
                throw std::invalid_argument("PowPoly: bad factor: " + factor);
            std::string var = factor.substr(1, caret - 1);
            std::string expected = var == "inf" ? "inf" : std::to_string(e.size());
            if (var != expected) throw std::invalid_argument("PowPoly: variables out of order: " + factor);
            e.push_back(std::stoi(factor.substr(caret + 1)));
            if (e.back() < 0) throw std::invalid_argument("PowPoly: negative exponent");
        }
        if (e.size() < 2) throw std::invalid_argument("PowPoly: too few factors: " + chunk);
        int cap = static_cast<int>(e.size()) - 2;
        if (!out) out.emplace(cap);
        if (out->value_cap() != cap) throw std::invalid_argument("PowPoly: inconsistent term lengths");
        out->add(e, c);
    }
    return *out;
}

std::vector<std::vector<ZLetter>> enumerate_enriched(const LabeledPoset& p, const AlphabetSpec& spec,
                                                     Execution exec) {
    auto letters = spec.letters();
    using Acc = std::vector<std::vector<ZLetter>>;
    Acc total;
    run_enriched(
        p, spec, exec,
        [&](Acc& sink) {
            return [&](const std::vector<int>& choice) {
                std::vector<ZLetter> f;
                f.reserve(choice.size());
                for (int li : choice) f.push_back(letters[li]);
                sink.push_back(std::move(f));
            };
        },
        [](Acc& into, Acc& part) {
            into.insert(into.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        },
        total);
    return total;
}

PowPoly gamma_poly(const LabeledPoset& p, const AlphabetSpec& spec, Execution exec) {
    auto letters = spec.letters();
    PowPoly total(spec.value_cap);
    run_enriched(
        p, spec, exec,
        [&](PowPoly& sink) {
            return [&sink, &letters, cap = spec.value_cap](const std::vector<int>& choice) {
                std::vector<int> e(cap + 2, 0);
                for (int li : choice) ++e[sink.slot(letters[li].value)];
                sink.add(e, 1);
            };
        },
        [](PowPoly& into, const PowPoly& part) { into += part; }, total);
    return total;
}

PowPoly gamma_poly(const Permutation& pi, const AlphabetSpec& spec, Execution exec) {
    return gamma_poly(chain_poset(pi), spec, exec);
}

IntSet fiber_ends(const GMap& g) {
    int n = static_cast<int>(g.size());
    for (int i = 1; i < n; ++i)
        if (g[i - 1] > g[i]) throw std::invalid_argument("fiber_ends: map is not weakly increasing");
    IntSet out;
    for (int i = 1; i <= n; ++i) {
        int before = i == 1 ? 0 : g[i - 2];
        int after = i == n ? kInfinity : g[i];
        if (!(before == g[i - 1] && g[i - 1] == after)) out.insert(i);
    }
    return out;
}

IntSet fiber_ends_by_fibers(const GMap& g) {
    std::map<int, std::pair<int, int>> fibers;
    for (int i = 1; i <= static_cast<int>(g.size()); ++i) {
        auto [it, fresh] = fibers.try_emplace(g[i - 1], i, i);
        if (!fresh) it->second.second = i;
    }
    IntSet out;
    for (const auto& [h, range] : fibers) {
        if (h != 0) out.insert(range.first);
        if (h != kInfinity) out.insert(range.second);
    }
    return out;
}

bool is_pi_amenable(const GMap& g, const Permutation& pi) {
    if (g.size() != pi.size()) throw std::invalid_argument("is_pi_amenable: size mismatch");
    for (std::size_t i = 1; i < g.size(); ++i)
        if (g[i - 1] > g[i]) return false;
    std::map<int, std::vector<int>> fibers;
    for (std::size_t i = 0; i < g.size(); ++i) fibers[g[i]].push_back(pi[i]);
    for (const auto& [h, vals] : fibers) {
        if (h == 0) {
            if (!std::is_sorted(vals.begin(), vals.end())) return false;
        } else if (h == kInfinity) {
            if (!std::is_sorted(vals.rbegin(), vals.rend())) return false;
        } else if (!is_v_shaped(vals)) {
            return false;
        }
    }
    return true;
}

std::vector<GMap> weakly_increasing_maps(int n, int value_cap) {
    std::vector<int> values;
    for (int v = 0; v <= value_cap; ++v) values.push_back(v);
    values.push_back(kInfinity);
    std::vector<GMap> out;
    GMap g;
    auto rec = [&](auto& self, std::size_t lo) -> void {
        if (static_cast<int>(g.size()) == n) {
            out.push_back(g);
            return;
        }
        for (std::size_t k = lo; k < values.size(); ++k) {
            g.push_back(values[k]);
            self(self, k);
            g.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

long long positive_weight(const GMap& g) {
    std::set<int> positive;
    for (int v : g)
        if (v != 0 && v != kInfinity) positive.insert(v);
    return 1LL << positive.size();
}

namespace {

template <class Keep>
PowPoly fe_sum(int n, int value_cap, Keep keep) {
    PowPoly out(value_cap);
    for (const auto& g : weakly_increasing_maps(n, value_cap))
        if (keep(fiber_ends(g))) out.add_map(g, Rational(static_cast<long>(positive_weight(g))));
    return out;
}

}  // namespace

PowPoly K_poly(int n, const IntSet& lambda, int value_cap) {
    return fe_sum(n, value_cap, [&](const IntSet& fe) { return is_subset(lambda, fe); });
}

PowPoly L_poly(int n, const IntSet& lambda, int value_cap) {
    return fe_sum(n, value_cap, [&](const IntSet& fe) { return set_intersection(lambda, fe).empty(); });
}

bool iex_checks(int n, int value_cap) {
    std::vector<PowPoly> ks, ls;
    for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
        IntSet s = subset_from_mask(mask);
        ks.push_back(K_poly(n, s, value_cap));
        ls.push_back(L_poly(n, s, value_cap));
    }
    for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
        PowPoly k_sum(value_cap), l_sum(value_cap);
        for (unsigned long long sub = mask;; sub = (sub - 1) & mask) {
            Rational sign = __builtin_popcountll(sub) % 2 ? -1 : 1;
            k_sum += sign * ls[sub];
            l_sum += sign * ks[sub];
            if (sub == 0) break;
        }
        if (!(k_sum == ks[mask]) || !(l_sum == ls[mask])) return false;
    }
    return true;
}

GMap fe_exist_construct(int n, const IntSet& lambda) {
    if (n < 0) throw std::invalid_argument("fe_exist_construct: negative n");
    bool member = is_lacunar(lambda) && (lambda.empty() || (lambda.min() >= 1 && lambda.max() <= n)) &&
                  (n == 0 || !lambda.empty());
    if (!member) throw std::invalid_argument("fe_exist_construct: " + lambda.to_string() + " is not in L_n");
    GMap g(n);
    for (int x = 1; x <= n; ++x) {
        if (x > lambda.max()) {
            g[x - 1] = kInfinity;
            continue;
        }
        int below = 0;
        for (int l : lambda)
            if (l < x) ++below;
        g[x - 1] = below;
    }
    return g;
}

bool product_rule_check(const Permutation& pi, const Permutation& sigma, const AlphabetSpec& spec) {
    PowPoly lhs = gamma_poly(pi, spec) * gamma_poly(sigma, spec);
    PowPoly rhs(spec.value_cap);
    for (const auto& tau : shuffles(pi, sigma)) rhs += gamma_poly(tau, spec);
    return lhs == rhs;
}

bool knl_product_rule_check(const Permutation& pi, const Permutation& sigma, int value_cap) {
    int n = static_cast<int>(pi.size()), m = static_cast<int>(sigma.size());
    PowPoly lhs = K_poly(n, exterior_peak_set(pi), value_cap) * K_poly(m, exterior_peak_set(sigma), value_cap);
    PowPoly rhs(value_cap);
    for (const auto& tau : shuffles(pi, sigma)) rhs += K_poly(n + m, exterior_peak_set(tau), value_cap);
    return lhs == rhs;
}

namespace {

std::size_t poly_rank(const std::vector<PowPoly>& polys) {
    std::map<std::vector<int>, std::size_t> index;
    for (const auto& p : polys)
        for (const auto& [e, c] : p.terms()) index.try_emplace(e, index.size());
    std::vector<RationalVector> rows;
    for (const auto& p : polys) {
        RationalVector row(index.size());
        for (const auto& [e, c] : p.terms()) row[index.at(e)] = c;
        rows.push_back(std::move(row));
    }
    return matrix_rank(rows, index.size());
}

}  // namespace

std::size_t lindep_rank(int n, int value_cap) {
    std::vector<PowPoly> polys;
    for (const auto& lambda : enumerate_Ln(n)) polys.push_back(K_poly(n, lambda, value_cap));
    return poly_rank(polys);
}

std::size_t joint_lindep_rank(int max_n, int value_cap) {
    std::vector<PowPoly> polys;
    for (int n = 0; n <= max_n; ++n)
        for (const auto& lambda : enumerate_Ln(n)) polys.push_back(K_poly(n, lambda, value_cap));
    return poly_rank(polys);
}

bool fund_lem_check(const LabeledPoset& p, const AlphabetSpec& spec) {
    PowPoly rhs(spec.value_cap);
    for (const auto& w : linear_extensions(p)) {
        std::vector<int> labels;
        for (int x : w) labels.push_back(p.labels[x]);
        rhs += gamma_poly(chain_poset(Permutation(labels)), spec);
    }
    return gamma_poly(p, spec) == rhs;
}

bool fund_lem_set_check(const LabeledPoset& p, const AlphabetSpec& spec) {
    auto all = enumerate_enriched(p, spec);
    std::map<std::vector<ZLetter>, int> hits;
    for (auto& f : all) hits.emplace(f, 0);
    if (hits.size() != all.size()) return false;
    for (const auto& w : linear_extensions(p)) {
        std::vector<int> labels;
        for (int x : w) labels.push_back(p.labels[x]);
        for (const auto& fw : enumerate_enriched(chain_poset(Permutation(labels)), spec)) {
            std::vector<ZLetter> f(p.size);
            for (int k = 0; k < p.size; ++k) f[w[k]] = fw[k];
            auto it = hits.find(f);
            if (it == hits.end()) return false;
            ++it->second;
        }
    }
    return std::all_of(hits.begin(), hits.end(), [](const auto& kv) { return kv.second == 1; });
}

bool prod1_check(const LabeledPoset& p, const LabeledPoset& q, const AlphabetSpec& spec) {
    return gamma_poly(p, spec) * gamma_poly(q, spec) == gamma_poly(disjoint_union(p, q), spec);
}

PowPoly shifted_qsf(int n, const IntSet& lambda, int value_cap) {
    PowPoly out(value_cap);
    PowPoly full = K_poly(n, lambda, value_cap);
    for (const auto& [e, c] : full.terms())
        if (e.front() == 0 && e.back() == 0) out.add(e, c);
    return out;
}

bool knl_product_in_span(int n, const IntSet& lambda, int m, const IntSet& omega, int value_cap) {
    PowPoly target = K_poly(n, lambda, value_cap) * K_poly(m, omega, value_cap);
    int total = n + m;
    std::vector<PowPoly> basis;
    for (unsigned long long mask = 0; mask < (1ULL << total); ++mask)
        basis.push_back(K_poly(total, subset_from_mask(mask), value_cap));
    std::size_t without = poly_rank(basis);
    basis.push_back(target);
    return poly_rank(basis) == without;
}

}  // namespace shufcompat
