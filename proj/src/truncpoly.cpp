#include "shufcompat/truncpoly.hpp"

#include <limits>
#include <stdexcept>

namespace shufcompat {

TruncPoly::TruncPoly(int vars, int max_degree) : vars_(vars), max_degree_(max_degree) {
    if (vars < 1 || vars > 16) throw std::invalid_argument("TruncPoly supports 1..16 variables");
    if (max_degree < 0 || max_degree > 15) throw std::invalid_argument("TruncPoly degree bound 0..15");
}

int TruncPoly::total_degree(Key key) {
    int d = 0;
    for (; key; key >>= 4) d += static_cast<int>(key & 0xF);
    return d;
}

int TruncPoly::min_support(Key key) {
    if (!key) return std::numeric_limits<int>::max();
    for (int i = 0;; ++i)
        if ((key >> (4 * i)) & 0xF) return i + 1;
}

int TruncPoly::max_support(Key key) {
    int last = 0;
    for (int i = 0; key; ++i, key >>= 4)
        if (key & 0xF) last = i + 1;
    return last;
}

void TruncPoly::add_packed(Key key, const Rational& coeff) {
    if (coeff == 0 || total_degree(key) > max_degree_) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void TruncPoly::add(const std::vector<int>& exponents, const Rational& coeff) {
    if (static_cast<int>(exponents.size()) > vars_) throw std::invalid_argument("too many exponents");
    Key key = 0;
    int total = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 0) throw std::invalid_argument("negative exponent");
        total += exponents[i];
        if (total > max_degree_) return;
        key |= static_cast<Key>(exponents[i]) << (4 * i);
    }
    add_packed(key, coeff);
}

Rational TruncPoly::coefficient(const std::vector<int>& exponents) const {
    Key key = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] > 15) return 0;
        key |= static_cast<Key>(exponents[i]) << (4 * i);
    }
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

TruncPoly& TruncPoly::operator+=(const TruncPoly& o) {
    for (const auto& [k, q] : o.terms_) add_packed(k, q);
    return *this;
}

TruncPoly& TruncPoly::operator-=(const TruncPoly& o) {
    for (const auto& [k, q] : o.terms_) add_packed(k, -q);
    return *this;
}

namespace {

// Weakly increasing index sequences, strict right after each descent position.
void expand_fundamental(const Composition& alpha, int vars, const Rational& q, TruncPoly& out) {
    const int n = alpha.size();
    const IntSet des = des_of_comp(alpha);
    std::vector<int> idx;
    auto rec = [&](auto&& self, int pos, int lo, TruncPoly::Key key) -> void {
        if (pos > n) {
            out.add_packed(key, q);
            return;
        }
        for (int i = lo; i <= vars; ++i) {
            const int next_lo = des.contains(pos) ? i + 1 : i;
            self(self, pos + 1, next_lo, key + (TruncPoly::Key{1} << (4 * (i - 1))));
        }
    };
    rec(rec, 1, 1, 0);
}

void expand_monomial(const Composition& alpha, int vars, const Rational& q, TruncPoly& out) {
    const std::size_t len = alpha.length();
    auto rec = [&](auto&& self, std::size_t j, int lo, TruncPoly::Key key) -> void {
        if (j == len) {
            out.add_packed(key, q);
            return;
        }
        for (int i = lo; i <= vars; ++i)
            self(self, j + 1, i + 1, key + (static_cast<TruncPoly::Key>(alpha[j]) << (4 * (i - 1))));
    };
    rec(rec, 0, 1, 0);
}

}  // namespace

TruncPoly expand(const QSymElement& e, int vars) {
    TruncPoly out(vars, e.max_degree());
    for (const auto& [alpha, q] : e.terms()) {
        if (e.basis() == Basis::F) expand_fundamental(alpha, vars, q, out);
        else expand_monomial(alpha, vars, q, out);
    }
    return out;
}

QSymElement from_polynomial(const TruncPoly& p, Basis basis, int max_degree) {
    QSymElement m(Basis::M, max_degree);
    for (int n = 0; n <= max_degree; ++n) {
        for (const auto& gamma : compositions_of(n)) {
            if (static_cast<int>(gamma.length()) > p.vars()) continue;
            const Rational q = p.coefficient(gamma.parts());
            if (q != 0) m.add_term(gamma, q);
        }
    }
    return to_basis(m, basis);
}

TruncPoly poly_gated_product(const TruncPoly& a, const TruncPoly& b, SupportGate gate) {
    TruncPoly out(std::max(a.vars(), b.vars()), std::min(a.max_degree(), b.max_degree()));
    for (const auto& [ka, qa] : a.terms()) {
        const int min_u = TruncPoly::min_support(ka), max_u = TruncPoly::max_support(ka);
        const int da = TruncPoly::total_degree(ka);
        for (const auto& [kb, qb] : b.terms()) {
            if (da + TruncPoly::total_degree(kb) > out.max_degree()) continue;
            const int min_v = TruncPoly::min_support(kb);
            bool keep = true;
            switch (gate) {
                case SupportGate::all: break;
                case SupportGate::prec: keep = min_u < min_v; break;
                case SupportGate::succeq: keep = min_u >= min_v; break;
                case SupportGate::bel: keep = max_u <= min_v; break;
                case SupportGate::tvi: keep = max_u < min_v; break;
            }
            if (keep) out.add_packed(ka + kb, qa * qb);
        }
    }
    return out;
}

}  // namespace shufcompat
