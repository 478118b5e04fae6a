#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "shufcompat/intset.hpp"

namespace shufcompat {

/// True iff no two consecutive integers both lie in `s`.
bool is_lacunar(const IntSet& s);

/// Nonempty lacunar subsets of [n] (for n = 0 the single set {}),
/// sorted ascending by set_compare.
std::vector<IntSet> enumerate_Ln(int n);

/// Fibonacci numbers with f(0) = 0, f(1) = 1; throws std::overflow_error past 64 bits.
std::uint64_t fibonacci(int k);

/// Total order on finite sets: A < B iff A != B and min(A sym-diff B) lies in A.
std::strong_ordering set_compare(const IntSet& a, const IntSet& b);

/// Strict-weak-ordering adapter for set_compare.
struct SetOrderLess {
    bool operator()(const IntSet& a, const IntSet& b) const { return set_compare(a, b) < 0; }
};

}  // namespace shufcompat
