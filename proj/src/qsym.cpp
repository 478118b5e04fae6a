#include "shufcompat/qsym.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "shufcompat/shuffle.hpp"
#include "shufcompat/statistics.hpp"

namespace shufcompat {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    for (char c : text)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw std::invalid_argument("bad rational '" + text + "'");
    Rational q;
    std::string t = text[0] == '+' ? text.substr(1) : text;
    if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    q.canonicalize();
    return q;
}

QSymElement::QSymElement(Basis basis, int max_degree) : basis_(basis), max_degree_(max_degree) {
    if (max_degree < 0) throw std::invalid_argument("negative degree bound");
}

QSymElement QSymElement::unit(Basis basis, int max_degree) {
    return basis_element(basis, Composition{}, max_degree);
}

QSymElement QSymElement::basis_element(Basis basis, const Composition& alpha, int max_degree,
                                       const Rational& coeff) {
    QSymElement e(basis, max_degree);
    e.add_term(alpha, coeff);
    return e;
}

Rational QSymElement::coefficient(const Composition& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rational(0) : it->second;
}

void QSymElement::add_term(const Composition& alpha, const Rational& coeff) {
    if (coeff == 0) return;
    if (alpha.size() > max_degree_) {
        truncated_ = true;
        return;
    }
    auto [it, inserted] = terms_.try_emplace(alpha, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

int QSymElement::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.size(); }

Rational QSymElement::counit() const { return coefficient(Composition{}); }

QSymElement QSymElement::homogeneous_part(int n) const {
    QSymElement out(basis_, max_degree_);
    for (const auto& [c, q] : terms_)
        if (c.size() == n) out.terms_.emplace(c, q);
    return out;
}

QSymElement QSymElement::with_max_degree(int max_degree) const {
    QSymElement out(basis_, max_degree);
    out.truncated_ = truncated_;
    for (const auto& [c, q] : terms_) out.add_term(c, q);
    return out;
}

QSymElement& QSymElement::operator+=(const QSymElement& o) {
    const QSymElement other = o.basis_ == basis_ ? o : to_basis(o, basis_);
    if (other.max_degree_ < max_degree_) *this = with_max_degree(other.max_degree_);
    truncated_ = truncated_ || other.truncated_;
    for (const auto& [c, q] : other.terms_) add_term(c, q);
    return *this;
}

QSymElement& QSymElement::operator-=(const QSymElement& o) { return *this += -o; }

QSymElement& QSymElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, q] : terms_) q *= c;
    return *this;
}

std::string QSymElement::to_string() const {
    std::string out(1, basis_ == Basis::F ? 'F' : 'M');
    out += ":";
    if (terms_.empty()) return out + " 0";
    for (const auto& [c, q] : terms_) {
        out += " " + q.get_str() + "*[";
        for (std::size_t i = 0; i < c.length(); ++i) {
            if (i) out += ",";
            out += std::to_string(c[i]);
        }
        out += "]";
    }
    return out;
}

QSymElement QSymElement::parse(const std::string& text, int max_degree) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("QSym text needs 'F:' or 'M:'");
    std::string head = text.substr(0, colon);
    head.erase(std::remove_if(head.begin(), head.end(), ::isspace), head.end());
    Basis basis;
    if (head == "F") basis = Basis::F;
    else if (head == "M") basis = Basis::M;
    else throw std::invalid_argument("unknown basis '" + head + "'");
    QSymElement e(basis, max_degree);
    std::istringstream in(text.substr(colon + 1));
    std::string tok;
    bool any = false;
    while (in >> tok) {
        if (tok == "0" && !any) {
            any = true;
            continue;
        }
        any = true;
        const auto star = tok.find('*');
        if (star == std::string::npos || tok.size() < star + 3 || tok[star + 1] != '[' ||
            tok.back() != ']')
            throw std::invalid_argument("bad QSym term '" + tok + "'");
        const Rational q = parse_rational(tok.substr(0, star));
        const Composition c = parse_composition(tok.substr(star + 1));
        if (e.terms_.count(c)) throw std::invalid_argument("repeated QSym term '" + tok + "'");
        e.add_term(c, q);
    }
    return e;
}

namespace {

template <typename Sign>
QSymElement change_basis(const QSymElement& e, Basis target, Sign sign) {
    QSymElement out(target, e.max_degree());
    for (const auto& [alpha, q] : e.terms()) {
        const int n = alpha.size();
        if (n == 0) {
            out.add_term(alpha, q);
            continue;
        }
        const unsigned long long full = (1ULL << (n - 1)) - 1;
        const unsigned long long base = mask_of_subset(des_of_comp(alpha));
        const unsigned long long free = full & ~base;
        // Enumerate all submasks of `free`.
        for (unsigned long long extra = free;; extra = (extra - 1) & free) {
            const IntSet b = subset_from_mask(base | extra);
            out.add_term(comp_of_set(n, b), sign(__builtin_popcountll(extra)) * q);
            if (extra == 0) break;
        }
    }
    return out;
}

}  // namespace

QSymElement m_to_f(const QSymElement& e) {
    if (e.basis() == Basis::F) return e;
    return change_basis(e, Basis::F, [](int k) { return Rational(k % 2 ? -1 : 1); });
}

QSymElement f_to_m(const QSymElement& e) {
    if (e.basis() == Basis::M) return e;
    return change_basis(e, Basis::M, [](int) { return Rational(1); });
}

QSymElement to_basis(const QSymElement& e, Basis target) {
    return target == Basis::F ? m_to_f(e) : f_to_m(e);
}

bool same_function(const QSymElement& a, const QSymElement& b) {
    return to_basis(a, Basis::F) == to_basis(b, Basis::F);
}

Permutation representative(const Composition& alpha, int offset) {
    const int n = alpha.size();
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(n));
    int top = n;
    for (int part : alpha.parts()) {
        for (int v = top - part + 1; v <= top; ++v) w.push_back(v + offset);
        top -= part;
    }
    return Permutation(std::move(w));
}

QSymElement product(const QSymElement& a, const QSymElement& b) {
    const int bound = std::min(a.max_degree(), b.max_degree());
    const QSymElement fa = m_to_f(a), fb = m_to_f(b);
    QSymElement out(Basis::F, bound);
    for (const auto& [alpha, qa] : fa.terms()) {
        for (const auto& [beta, qb] : fb.terms()) {
            if (alpha.size() + beta.size() > bound) {
                out.add_term(concat(alpha, beta), qa * qb);  // records truncation
                continue;
            }
            const Permutation pi = representative(alpha, 0);
            const Permutation sigma = representative(beta, alpha.size());
            const Rational q = qa * qb;
            for (const auto& chi : shuffles(pi, sigma)) out.add_term(comp_of_perm(chi), q);
        }
    }
    return to_basis(out, a.basis());
}

namespace {

constexpr int kNoSupport = std::numeric_limits<int>::max();

bool gate_allows(SupportGate gate, int min_u, int max_u, int min_v, int max_v) {
    (void)max_v;
    switch (gate) {
        case SupportGate::all: return true;
        case SupportGate::prec: return min_u < min_v;
        case SupportGate::succeq: return min_u >= min_v;
        case SupportGate::bel: return max_u <= min_v;
        case SupportGate::tvi: return max_u < min_v;
    }
    return false;
}

struct QuasiShuffler {
    const std::vector<int>& u;
    const std::vector<int>& v;
    SupportGate gate;
    Rational coeff;
    QSymElement& out;
    std::vector<int> parts;

    void run(std::size_t i, std::size_t j, int min_u, int max_u, int min_v, int max_v) {
        if (i == u.size() && j == v.size()) {
            if (gate_allows(gate, min_u, max_u, min_v, max_v)) out.add_term(Composition(parts), coeff);
            return;
        }
        const int pos = static_cast<int>(parts.size()) + 1;
        if (i < u.size()) {
            parts.push_back(u[i]);
            run(i + 1, j, min_u == kNoSupport ? pos : min_u, pos, min_v, max_v);
            parts.pop_back();
        }
        if (j < v.size()) {
            parts.push_back(v[j]);
            run(i, j + 1, min_u, max_u, min_v == kNoSupport ? pos : min_v, pos);
            parts.pop_back();
        }
        if (i < u.size() && j < v.size()) {
            parts.push_back(u[i] + v[j]);
            run(i + 1, j + 1, min_u == kNoSupport ? pos : min_u, pos,
                min_v == kNoSupport ? pos : min_v, pos);
            parts.pop_back();
        }
    }
};

}  // namespace

QSymElement gated_product(const QSymElement& a, const QSymElement& b, SupportGate gate) {
    const int bound = std::min(a.max_degree(), b.max_degree());
    const QSymElement ma = f_to_m(a), mb = f_to_m(b);
    QSymElement out(Basis::M, bound);
    for (const auto& [alpha, qa] : ma.terms()) {
        for (const auto& [beta, qb] : mb.terms()) {
            if (alpha.size() + beta.size() > bound) {
                out.add_term(concat(alpha, beta), qa * qb);  // records truncation
                continue;
            }
            QuasiShuffler qs{alpha.parts(), beta.parts(), gate, qa * qb, out, {}};
            // max of an empty support is 0, min is +infinity.
            qs.run(0, 0, kNoSupport, 0, kNoSupport, 0);
        }
    }
    return to_basis(out, a.basis());
}

QSymElement prec(const QSymElement& a, const QSymElement& b) {
    return gated_product(a, b, SupportGate::prec);
}

QSymElement succeq(const QSymElement& a, const QSymElement& b) {
    return gated_product(a, b, SupportGate::succeq);
}

namespace {

template <typename Rule>
QSymElement runic_rule(const QSymElement& a, const QSymElement& b, Basis basis, Rule rule) {
    const int bound = std::min(a.max_degree(), b.max_degree());
    const QSymElement xa = to_basis(a, basis), xb = to_basis(b, basis);
    QSymElement out(basis, bound);
    for (const auto& [alpha, qa] : xa.terms())
        for (const auto& [beta, qb] : xb.terms()) rule(out, alpha, beta, qa * qb);
    return to_basis(out, a.basis());
}

}  // namespace

QSymElement bel(const QSymElement& a, const QSymElement& b) {
    return runic_rule(a, b, Basis::F,
                      [](QSymElement& out, const Composition& x, const Composition& y,
                         const Rational& q) { out.add_term(near_concat(x, y), q); });
}

QSymElement tvi(const QSymElement& a, const QSymElement& b) {
    return runic_rule(a, b, Basis::F,
                      [](QSymElement& out, const Composition& x, const Composition& y,
                         const Rational& q) { out.add_term(concat(x, y), q); });
}

QSymElement bel_m_rule(const QSymElement& a, const QSymElement& b) {
    return runic_rule(a, b, Basis::M,
                      [](QSymElement& out, const Composition& x, const Composition& y,
                         const Rational& q) {
                          out.add_term(concat(x, y), q);
                          if (!x.empty() && !y.empty()) out.add_term(near_concat(x, y), q);
                      });
}

QSymElement tvi_m_rule(const QSymElement& a, const QSymElement& b) {
    return runic_rule(a, b, Basis::M,
                      [](QSymElement& out, const Composition& x, const Composition& y,
                         const Rational& q) { out.add_term(concat(x, y), q); });
}

namespace {

QSymElement shuffle_sum(const std::vector<Permutation>& perms, int max_degree) {
    QSymElement out(Basis::F, max_degree);
    for (const auto& chi : perms) out.add_term(comp_of_perm(chi), 1);
    return out;
}

void require_head_order(const Permutation& pi, const Permutation& sigma) {
    if (pi.empty() || sigma.empty() || !(pi[0] > sigma[0]))
        throw std::invalid_argument("shuffle formula needs nonempty words with pi_1 > sigma_1");
}

}  // namespace

QSymElement prec_by_shuffles(const Permutation& pi, const Permutation& sigma, int max_degree) {
    require_head_order(pi, sigma);
    return shuffle_sum(left_shuffles(pi, sigma), max_degree);
}

QSymElement succeq_by_shuffles(const Permutation& pi, const Permutation& sigma, int max_degree) {
    require_head_order(pi, sigma);
    return shuffle_sum(right_shuffles(pi, sigma), max_degree);
}

QSymTensor coproduct(const QSymElement& a) {
    const QSymElement ma = f_to_m(a);
    QSymTensor out;
    out.basis = Basis::M;
    out.max_degree = a.max_degree();
    for (const auto& [alpha, q] : ma.terms()) {
        const auto& p = alpha.parts();
        for (std::size_t k = 0; k <= p.size(); ++k) {
            Composition left(std::vector<int>(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k)));
            Composition right(std::vector<int>(p.begin() + static_cast<std::ptrdiff_t>(k), p.end()));
            auto key = std::make_pair(std::move(left), std::move(right));
            auto [it, inserted] = out.terms.try_emplace(key, q);
            if (!inserted) {
                it->second += q;
                if (it->second == 0) out.terms.erase(it);
            }
        }
    }
    return out;
}

namespace {

const QSymElement& antipode_of_m(const Composition& alpha, int bound,
                                 std::map<Composition, QSymElement>& memo) {
    auto it = memo.find(alpha);
    if (it != memo.end()) return it->second;
    QSymElement result(Basis::M, bound);
    if (alpha.empty()) {
        result.add_term(alpha, 1);
    } else {
        const auto& p = alpha.parts();
        for (std::size_t k = 0; k < p.size(); ++k) {
            Composition head(std::vector<int>(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k)));
            Composition rest(std::vector<int>(p.begin() + static_cast<std::ptrdiff_t>(k), p.end()));
            const QSymElement s_head = antipode_of_m(head, bound, memo);
            result -= gated_product(s_head, QSymElement::basis_element(Basis::M, rest, bound),
                                    SupportGate::all);
        }
    }
    return memo.emplace(alpha, std::move(result)).first->second;
}

}  // namespace

QSymElement antipode(const QSymElement& a) {
    const QSymElement ma = f_to_m(a);
    std::map<Composition, QSymElement> memo;
    QSymElement out(Basis::M, a.max_degree());
    for (const auto& [alpha, q] : ma.terms()) out += q * antipode_of_m(alpha, a.max_degree(), memo);
    return to_basis(out, a.basis());
}

bool check_dendriform_axioms(const QSymElement& a, const QSymElement& b, const QSymElement& c) {
    const bool split = same_function(prec(a, b) + succeq(a, b), product(a, b));
    const bool assoc1 = same_function(prec(prec(a, b), c), prec(a, product(b, c)));
    const bool assoc2 = same_function(prec(succeq(a, b), c), succeq(a, prec(b, c)));
    const bool assoc3 = same_function(succeq(a, succeq(b, c)), succeq(product(a, b), c));
    return split && assoc1 && assoc2 && assoc3;
}

bool check_unit_rules(const QSymElement& a) {
    const QSymElement one = QSymElement::unit(a.basis(), a.max_degree());
    const QSymElement eps = a.counit() * one;
    return prec(one, a).is_zero() && same_function(prec(a, one), a - eps) &&
           same_function(succeq(one, a), a) && same_function(succeq(a, one), eps);
}

namespace {

// sum over (b) of (S(b1) op a) b2, grouping the coproduct by its right tensor factor.
QSymElement antipode_convolution(const QSymElement& a, const QSymElement& b,
                                 QSymElement (*op)(const QSymElement&, const QSymElement&)) {
    const int bound = std::min(a.max_degree(), b.max_degree());
    const QSymTensor delta = coproduct(b);
    std::map<Composition, QSymElement> left_by_right;
    std::map<Composition, QSymElement> memo;
    for (const auto& [key, q] : delta.terms) {
        auto [it, inserted] = left_by_right.try_emplace(key.second, Basis::M, bound);
        it->second += q * antipode_of_m(key.first, bound, memo);
    }
    QSymElement out(Basis::M, bound);
    for (const auto& [right, left] : left_by_right)
        out += gated_product(op(left, a), QSymElement::basis_element(Basis::M, right, bound),
                             SupportGate::all);
    return out;
}

}  // namespace

bool check_beldend(const QSymElement& a, const QSymElement& b) {
    return same_function(antipode_convolution(a, b, &bel), prec(a, b));
}

bool check_tvidend(const QSymElement& a, const QSymElement& b) {
    return same_function(antipode_convolution(a, b, &tvi), succeq(b, a));
}

}  // namespace shufcompat
