#pragma once

#include <compare>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shufcompat/execution.hpp"
#include "shufcompat/intset.hpp"
#include "shufcompat/permutation.hpp"
#include "shufcompat/rational.hpp"

namespace shufcompat {

/// The value "infinity" in GMaps and ZLetters.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

enum class AlphabetPreset { ordinary, stembridge, petersen, epk };

std::string_view preset_name(AlphabetPreset p);
std::optional<AlphabetPreset> parse_preset(std::string_view s);

/// A letter (value, sign); the sign is true for '+'.
struct ZLetter {
    int value = 0;
    bool positive = true;
    friend bool operator==(const ZLetter&, const ZLetter&) = default;
    /// Value first; at equal values -v precedes +v.
    friend std::strong_ordering operator<=>(const ZLetter& a, const ZLetter& b) {
        if (auto c = a.value <=> b.value; c != 0) return c;
        return static_cast<int>(a.positive) <=> static_cast<int>(b.positive);
    }
    std::string to_string() const;
};

/// Finite truncation of a signed alphabet.
///   ordinary:   +1, ..., +V
///   stembridge: -1 < +1 < ... < -V < +V
///   petersen:   +0 < -1 < +1 < ... < -V < +V
///   epk:        +0 < -1 < +1 < ... < -V < +V < -inf
struct AlphabetSpec {
    AlphabetPreset preset = AlphabetPreset::epk;
    int value_cap = 1;
    bool has_bottom_zero = true;
    bool has_top_infinity = true;

    static AlphabetSpec make(AlphabetPreset preset, int value_cap);
    bool allows(const ZLetter& z) const;
    /// Letters in increasing order.
    std::vector<ZLetter> letters() const;
};

/// Finite poset on {0, ..., size-1} given by cover relations, with an injective labeling.
struct LabeledPoset {
    int size = 0;
    std::vector<std::pair<int, int>> covers;
    std::vector<int> labels;
    /// less[x][y] iff x < y (transitive closure of covers).
    std::vector<std::vector<bool>> less;
};

/// Validates and closes the relation; throws std::invalid_argument on cycles,
/// out-of-range elements or non-injective labels.
LabeledPoset make_poset(int size, std::vector<std::pair<int, int>> covers, std::vector<int> labels);

/// The chain 0 < 1 < ... < n-1 labeled by pi.
LabeledPoset chain_poset(const Permutation& pi);

/// P and Q side by side; Q's elements are renumbered after P's.
LabeledPoset disjoint_union(const LabeledPoset& p, const LabeledPoset& q);

/// Linear extensions as element lists, lexicographic.
std::vector<std::vector<int>> linear_extensions(const LabeledPoset& p);

/// Weakly-or-not map [n] -> {0,...,V} with kInfinity allowed.
using GMap = std::vector<int>;

/// Polynomial in x_0, ..., x_V, x_inf with exact coefficients.
/// Exponent vectors have length V+2; the last entry belongs to x_inf.
class PowPoly {
public:
    explicit PowPoly(int value_cap = 1);

    int value_cap() const { return cap_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    /// Index of a value in exponent vectors (kInfinity maps to V+1).
    int slot(int value) const;
    void add(const std::vector<int>& exponents, const Rational& coeff);
    /// Adds coeff * prod_i x_{g(i)}.
    void add_map(const GMap& g, const Rational& coeff);

    PowPoly& operator+=(const PowPoly& o);
    PowPoly& operator-=(const PowPoly& o);
    PowPoly& operator*=(const Rational& c);
    friend PowPoly operator+(PowPoly a, const PowPoly& b) { return a += b; }
    friend PowPoly operator-(PowPoly a, const PowPoly& b) { return a -= b; }
    friend PowPoly operator*(const Rational& c, PowPoly a) { return a *= c; }
    friend PowPoly operator*(const PowPoly& a, const PowPoly& b);
    friend bool operator==(const PowPoly& a, const PowPoly& b) {
        return a.cap_ == b.cap_ && a.terms_ == b.terms_;
    }

    /// Drops every monomial using a finite value above `cap` and re-indexes.
    PowPoly restrict_cap(int cap) const;

    /// Terms "coeff*x0^a0 x1^a1 ... xinf^ak" sorted by exponent vector,
    /// joined by " + "; zero prints as "0".
    std::string to_string() const;
    static PowPoly parse(const std::string& text);

private:
    int cap_;
    std::map<std::vector<int>, Rational> terms_;
};

/// Maps f : P -> Z satisfying f(x) <= f(y), and the sign conditions on equal letters,
/// for every x < y.
std::vector<std::vector<ZLetter>> enumerate_enriched(const LabeledPoset& p, const AlphabetSpec& spec,
                                                     Execution exec = Execution::parallel);

/// Sum over enriched partitions of prod_p x_{|f(p)|}.
PowPoly gamma_poly(const LabeledPoset& p, const AlphabetSpec& spec, Execution exec = Execution::parallel);
PowPoly gamma_poly(const Permutation& pi, const AlphabetSpec& spec, Execution exec = Execution::parallel);

/// i belongs iff g(i-1) = g(i) = g(i+1) fails, with g(0) = 0 and g(n+1) = inf.
/// Throws std::invalid_argument unless g is weakly increasing.
IntSet fiber_ends(const GMap& g);

/// Smallest element of each fiber not over 0, largest element of each fiber not over inf.
IntSet fiber_ends_by_fibers(const GMap& g);

/// Fiber over 0 increasing, positive finite fibers V-shaped, fiber over inf decreasing,
/// g weakly increasing.
bool is_pi_amenable(const GMap& g, const Permutation& pi);

/// Weakly increasing maps [n] -> {0,...,V,inf} in lexicographic order.
std::vector<GMap> weakly_increasing_maps(int n, int value_cap);

/// 2^(number of distinct positive finite values of g).
long long positive_weight(const GMap& g);

/// Sum over weakly increasing g with lambda inside FE(g) of 2^(positive values) x_g.
PowPoly K_poly(int n, const IntSet& lambda, int value_cap);
/// Same sum over g with lambda disjoint from FE(g).
PowPoly L_poly(int n, const IntSet& lambda, int value_cap);

/// Both inclusion-exclusion identities between K and L for every lambda inside [n].
bool iex_checks(int n, int value_cap);

/// Weakly increasing g with FE(g) = (lambda + (lambda+1)) cut to [n].
/// Throws std::invalid_argument unless lambda belongs to L_n.
GMap fe_exist_construct(int n, const IntSet& lambda);

/// Gamma(pi) Gamma(sigma) = sum over shuffles of Gamma(tau).
bool product_rule_check(const Permutation& pi, const Permutation& sigma, const AlphabetSpec& spec);
/// K_{n,Epk pi} K_{m,Epk sigma} = sum over shuffles of K_{n+m,Epk tau}.
bool knl_product_rule_check(const Permutation& pi, const Permutation& sigma, int value_cap);

/// Rank of the coefficient matrix of K_{n,lambda}, lambda in L_n.
std::size_t lindep_rank(int n, int value_cap);
/// Rank of all K_{n,lambda} for n <= max_n, lambda in L_n, stacked together.
std::size_t joint_lindep_rank(int max_n, int value_cap);

/// Gamma(P) = sum over linear extensions w of Gamma(w).
bool fund_lem_check(const LabeledPoset& p, const AlphabetSpec& spec);
/// Every enriched P-partition is an enriched partition of exactly one linear extension.
bool fund_lem_set_check(const LabeledPoset& p, const AlphabetSpec& spec);
/// Gamma(P) Gamma(Q) = Gamma(P disjoint-union Q).
bool prod1_check(const LabeledPoset& p, const LabeledPoset& q, const AlphabetSpec& spec);

/// K_{n,lambda} with x_0 = x_inf = 0.
PowPoly shifted_qsf(int n, const IntSet& lambda, int value_cap);

/// Exploratory: whether K_{n,lambda} K_{m,omega} lies in the span of all K_{n+m,xi}.
bool knl_product_in_span(int n, const IntSet& lambda, int m, const IntSet& omega, int value_cap);

}  // namespace shufcompat
