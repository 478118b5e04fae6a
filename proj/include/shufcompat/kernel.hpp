#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shufcompat/composition.hpp"
#include "shufcompat/execution.hpp"
#include "shufcompat/linalg.hpp"
#include "shufcompat/qsym.hpp"
#include "shufcompat/statistics.hpp"

namespace shufcompat {

/// A subspace of the degree-n part of QSym, in coordinates over the F basis
/// (or the M basis where stated), columns ordered as compositions_of(n).
struct SpanBasis {
    int degree = 0;
    Basis basis = Basis::F;
    std::vector<Composition> ambient;
    EchelonSpan span;

    std::size_t dimension() const { return span.rank(); }
    /// Membership of the degree-n part of e (converted to this basis).
    bool contains(const QSymElement& e) const;
    friend bool operator==(const SpanBasis& a, const SpanBasis& b) {
        return a.degree == b.degree && a.basis == b.basis && a.span == b.span;
    }
};

/// Coordinates of the degree-n part of e in the given basis.
RationalVector coordinates(const QSymElement& e, int n, Basis basis);
QSymElement element_from_coordinates(const RationalVector& v, int n, Basis basis, int max_degree);

/// Groups compositions of n by statistic value; classes listed in order of first member.
std::vector<std::vector<Composition>> equivalence_classes(StatTag tag, int n);

/// F_J - F_K for every J in a class and K the first member of that class.
std::vector<QSymElement> kernel_generators(StatTag tag, int n, int max_degree);

/// Span of F_J - F_K over st-equivalent compositions of n.
/// Throws std::invalid_argument for non-descent statistics.
SpanBasis kernel_component(StatTag tag, int n);

/// Span of F_J - F_K over J -> K, and of M_J + M_K over J ->_M K (converted to F).
SpanBasis epk_f_generators(int n);
SpanBasis epk_m_generators(int n);

/// Number of st-equivalence classes of compositions of n.
std::size_t shuffle_algebra_dimension(StatTag tag, int n);

/// The three subset-sum expansions of M through F, for every admissible (C, k) over [n-1].
bool m_through_f_checks(int n);

enum class IdealOp { product, prec, succeq, bel, tvi };
enum class Side { left, right, both };

inline constexpr IdealOp kIdealOps[] = {IdealOp::product, IdealOp::prec, IdealOp::succeq,
                                        IdealOp::bel, IdealOp::tvi};

std::string_view op_name(IdealOp op);
std::string_view side_name(Side side);
std::optional<IdealOp> parse_op(std::string_view s);
std::optional<Side> parse_side(std::string_view s);

QSymElement apply_op(IdealOp op, const QSymElement& a, const QSymElement& b);

struct IdealWitness {
    Side side = Side::left;
    QSymElement generator;   // element of the kernel
    QSymElement multiplier;  // F-basis element
    QSymElement result;      // multiplier * generator (left) or generator * multiplier (right)
};

struct IdealVerdict {
    bool holds = true;
    std::optional<IdealWitness> witness;
};

/// Checks multiplier * g (left) and/or g * multiplier (right) against the kernel for
/// every kernel generator g and F-basis multiplier of positive degree, total degree <= N.
IdealVerdict is_op_ideal(StatTag tag, IdealOp op, Side side, int max_degree,
                         Execution exec = Execution::parallel);

/// Composition-level test for bel/tvi: G (.) J ~ G (.) K, J (.) G ~ K (.) G,
/// [G,J] ~ [G,K], [J,G] ~ [K,G] for all equivalent J, K and nonempty G.
bool runic_composition_criterion(StatTag tag, IdealOp op, Side side, int max_degree);

struct MBinomialResult {
    bool certified = false;
    int degree = 0;
    /// Two-term M combinations whose span equals the kernel (when certified).
    std::vector<QSymElement> certificate;
    std::string note;
};

/// Pairwise search for a spanning set of two-term M-combinations inside the kernel.
MBinomialResult is_m_binomial(StatTag tag, int n);

struct IdealMatrix {
    int max_degree = 0;
    std::vector<StatTag> rows;
    std::vector<std::pair<IdealOp, Side>> columns;
    std::vector<std::vector<IdealVerdict>> cells;
    /// Witness ids per cell ("" when the verdict holds), assigned row-major as w1, w2, ...
    std::vector<std::vector<std::string>> witness_ids;
    /// Whether every bel/tvi cell agrees with runic_composition_criterion.
    bool criterion_agrees = true;
};

IdealMatrix ideal_matrix(int max_degree, Execution exec = Execution::parallel);

/// Rows = statistics, columns = op:side, values true / false(wK).
std::string ideal_matrix_tsv(const IdealMatrix& m);

}  // namespace shufcompat
