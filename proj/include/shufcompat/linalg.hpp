#pragma once

#include <cstddef>
#include <vector>

#include "shufcompat/rational.hpp"

namespace shufcompat {

using RationalVector = std::vector<Rational>;

/// Subspace of Q^dim held as a reduced row-echelon basis; pivots are the
/// smallest-index nonzero entries. Two spans are equal iff their rows are equal.
class EchelonSpan {
public:
    explicit EchelonSpan(std::size_t dim = 0) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<RationalVector>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Returns true when the vector was independent of the current rows.
    bool insert(RationalVector v);
    RationalVector reduce(RationalVector v) const;
    bool contains(const RationalVector& v) const;

    /// Basis of the orthogonal complement { w : row . w = 0 for every row }.
    std::vector<RationalVector> null_space() const;

    friend bool operator==(const EchelonSpan& a, const EchelonSpan& b) {
        return a.dim_ == b.dim_ && a.rows_ == b.rows_;
    }

private:
    std::size_t dim_;
    std::vector<RationalVector> rows_;
    std::vector<std::size_t> pivots_;
};

std::size_t matrix_rank(const std::vector<RationalVector>& rows, std::size_t dim);

}  // namespace shufcompat
