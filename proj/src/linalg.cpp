#include "shufcompat/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace shufcompat {

RationalVector EchelonSpan::reduce(RationalVector v) const {
    if (v.size() != dim_) throw std::invalid_argument("vector length does not match span dimension");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::size_t p = pivots_[r];
        if (v[p] == 0) continue;
        const Rational f = v[p];
        for (std::size_t c = p; c < dim_; ++c)
            if (rows_[r][c] != 0) v[c] -= f * rows_[r][c];
    }
    return v;
}

bool EchelonSpan::contains(const RationalVector& v) const {
    const RationalVector r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& q) { return q == 0; });
}

bool EchelonSpan::insert(RationalVector v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < dim_ && v[p] == 0) ++p;
    if (p == dim_) return false;
    const Rational lead = v[p];
    for (std::size_t c = p; c < dim_; ++c) v[c] /= lead;
    for (auto& row : rows_) {
        if (row[p] == 0) continue;
        const Rational f = row[p];
        for (std::size_t c = p; c < dim_; ++c)
            if (v[c] != 0) row[c] -= f * v[c];
    }
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin());
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    return true;
}

std::vector<RationalVector> EchelonSpan::null_space() const {
    std::vector<bool> is_pivot(dim_, false);
    for (std::size_t p : pivots_) is_pivot[p] = true;
    std::vector<RationalVector> out;
    for (std::size_t f = 0; f < dim_; ++f) {
        if (is_pivot[f]) continue;
        RationalVector w(dim_, Rational(0));
        w[f] = 1;
        for (std::size_t r = 0; r < rows_.size(); ++r) w[pivots_[r]] = -rows_[r][f];
        out.push_back(std::move(w));
    }
    return out;
}

std::size_t matrix_rank(const std::vector<RationalVector>& rows, std::size_t dim) {
    EchelonSpan span(dim);
    for (const auto& r : rows) span.insert(r);
    return span.rank();
}

}  // namespace shufcompat
