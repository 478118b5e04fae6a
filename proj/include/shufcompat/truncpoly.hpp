#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "shufcompat/qsym.hpp"
#include "shufcompat/rational.hpp"

namespace shufcompat {

/// Polynomial in x_1..x_m with exact coefficients, truncated at total degree N.
/// Monomials are packed four bits per variable, so m <= 16 and N <= 15.
class TruncPoly {
public:
    using Key = std::uint64_t;

    TruncPoly(int vars, int max_degree);

    int vars() const { return vars_; }
    int max_degree() const { return max_degree_; }
    const std::unordered_map<Key, Rational>& terms() const { return terms_; }

    /// Adds coeff * x^exponents; monomials above the degree bound are dropped.
    void add(const std::vector<int>& exponents, const Rational& coeff);
    void add_packed(Key key, const Rational& coeff);
    Rational coefficient(const std::vector<int>& exponents) const;

    static int exponent(Key key, int var) { return static_cast<int>((key >> (4 * var)) & 0xF); }
    static int total_degree(Key key);
    /// Smallest / largest variable index (1-based) in the monomial; +infinity / 0 for 1.
    static int min_support(Key key);
    static int max_support(Key key);

    TruncPoly& operator+=(const TruncPoly& o);
    TruncPoly& operator-=(const TruncPoly& o);
    friend TruncPoly operator+(TruncPoly a, const TruncPoly& b) { return a += b; }
    friend TruncPoly operator-(TruncPoly a, const TruncPoly& b) { return a -= b; }
    friend bool operator==(const TruncPoly& a, const TruncPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

private:
    int vars_;
    int max_degree_;
    std::unordered_map<Key, Rational> terms_;
};

/// Restriction of the defining sums of M_alpha / F_alpha to x_1..x_m, truncated
/// at the element's degree bound.
TruncPoly expand(const QSymElement& e, int vars);

/// Reads the quasisymmetric function back from the coefficients of the packed
/// monomials x_1^g1 ... x_k^gk; faithful when vars >= max_degree.
QSymElement from_polynomial(const TruncPoly& p, Basis basis, int max_degree);

/// Monomial-by-monomial products over all pairs of monomials, filtered by the gate.
TruncPoly poly_gated_product(const TruncPoly& a, const TruncPoly& b, SupportGate gate);

}  // namespace shufcompat
