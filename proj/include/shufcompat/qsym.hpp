#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shufcompat/composition.hpp"
#include "shufcompat/permutation.hpp"
#include "shufcompat/rational.hpp"

namespace shufcompat {

enum class Basis { M, F };

inline constexpr int kDefaultMaxDegree = 6;

/// Truncated quasisymmetric function: rational combination of M_alpha or F_alpha
/// with |alpha| <= max_degree. Terms are kept sorted by (size, binary-counter order).
class QSymElement {
public:
    explicit QSymElement(Basis basis = Basis::F, int max_degree = kDefaultMaxDegree);

    static QSymElement unit(Basis basis, int max_degree);
    static QSymElement basis_element(Basis basis, const Composition& alpha, int max_degree,
                                     const Rational& coeff = 1);

    Basis basis() const { return basis_; }
    int max_degree() const { return max_degree_; }
    /// Set when some term was discarded for exceeding max_degree.
    bool truncated() const { return truncated_; }
    const std::map<Composition, Rational>& terms() const { return terms_; }

    Rational coefficient(const Composition& alpha) const;
    void add_term(const Composition& alpha, const Rational& coeff);
    bool is_zero() const { return terms_.empty(); }
    /// Largest term size, or -1 for zero.
    int degree() const;
    /// Coefficient of the empty composition.
    Rational counit() const;
    QSymElement homogeneous_part(int n) const;
    QSymElement with_max_degree(int max_degree) const;

    QSymElement& operator+=(const QSymElement& o);
    QSymElement& operator-=(const QSymElement& o);
    QSymElement& operator*=(const Rational& c);
    friend QSymElement operator+(QSymElement a, const QSymElement& b) { return a += b; }
    friend QSymElement operator-(QSymElement a, const QSymElement& b) { return a -= b; }
    friend QSymElement operator-(QSymElement a) { return a *= Rational(-1); }
    friend QSymElement operator*(const Rational& c, QSymElement a) { return a *= c; }

    /// Same basis and same terms; max_degree and truncation flag are ignored.
    friend bool operator==(const QSymElement& a, const QSymElement& b) {
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }

    /// "F: 1*[1,2] -1*[3]"; zero prints as "F: 0".
    std::string to_string() const;
    static QSymElement parse(const std::string& text, int max_degree = kDefaultMaxDegree);

private:
    Basis basis_;
    int max_degree_;
    bool truncated_ = false;
    std::map<Composition, Rational> terms_;
};

QSymElement to_basis(const QSymElement& e, Basis target);
/// M_alpha = sum over refinements beta of (-1)^(l(beta)-l(alpha)) F_beta.
QSymElement m_to_f(const QSymElement& e);
/// F_alpha = sum over refinements beta of M_beta.
QSymElement f_to_m(const QSymElement& e);

/// Equality of the underlying functions regardless of basis.
bool same_function(const QSymElement& a, const QSymElement& b);

/// Product: F_{Comp pi} F_{Comp sigma} = sum over shuffles, pi on 1..n, sigma on n+1..n+m.
/// Result in the basis of `a`, truncated at min of the two degree bounds.
QSymElement product(const QSymElement& a, const QSymElement& b);

/// Dendriform halves: monomial pairs kept when min Supp m < min Supp n (prec)
/// or min Supp m >= min Supp n (succeq).
QSymElement prec(const QSymElement& a, const QSymElement& b);
QSymElement succeq(const QSymElement& a, const QSymElement& b);

/// Runic products: monomial pairs kept when max Supp m <= min Supp n (bel)
/// or max Supp m < min Supp n (tvi). Evaluated by F_a bel F_b = F_{a (.) b}
/// and F_a tvi F_b = F_{[a,b]}.
QSymElement bel(const QSymElement& a, const QSymElement& b);
QSymElement tvi(const QSymElement& a, const QSymElement& b);

/// Which monomial pairs (m, n) contribute m*n.
enum class SupportGate { all, prec, succeq, bel, tvi };

/// Monomial-level evaluation: every monomial of the product is split into a
/// contribution of `a` and of `b`, and the gate is applied to their supports.
/// Uses quasisymmetry to work on packed monomials only.
QSymElement gated_product(const QSymElement& a, const QSymElement& b, SupportGate gate);

/// Shuffle-sum form of prec/succeq: sums F_{Comp chi} over left (resp. right) shuffles.
/// Requires pi_1 > sigma_1; throws std::invalid_argument otherwise.
QSymElement prec_by_shuffles(const Permutation& pi, const Permutation& sigma, int max_degree);
QSymElement succeq_by_shuffles(const Permutation& pi, const Permutation& sigma, int max_degree);

/// Basis rules for the runic products in the M basis:
/// M_a bel M_b = M_[a,b] + M_{a (.) b} for nonempty a, b; M_a tvi M_b = M_[a,b].
QSymElement bel_m_rule(const QSymElement& a, const QSymElement& b);
QSymElement tvi_m_rule(const QSymElement& a, const QSymElement& b);

/// Permutation on letters offset+1..offset+n whose descent composition is alpha.
Permutation representative(const Composition& alpha, int offset = 0);

/// Formal sum of pure tensors in one basis.
struct QSymTensor {
    Basis basis = Basis::M;
    int max_degree = kDefaultMaxDegree;
    std::map<std::pair<Composition, Composition>, Rational> terms;
};

/// Deconcatenation coproduct, computed in the M basis.
QSymTensor coproduct(const QSymElement& a);

/// Antipode, from the convolution identity sum S(a1) a2 = counit(a) 1, in the basis of `a`.
QSymElement antipode(const QSymElement& a);

/// The four dendriform equations for the triple.
bool check_dendriform_axioms(const QSymElement& a, const QSymElement& b, const QSymElement& c);
/// 1 prec a = 0, a prec 1 = a - counit(a), 1 succeq a = a, a succeq 1 = counit(a).
bool check_unit_rules(const QSymElement& a);
/// sum over (b) of (S(b1) bel a) b2 equals a prec b.
bool check_beldend(const QSymElement& a, const QSymElement& b);
/// sum over (b) of (S(b1) tvi a) b2 equals b succeq a.
bool check_tvidend(const QSymElement& a, const QSymElement& b);

}  // namespace shufcompat
