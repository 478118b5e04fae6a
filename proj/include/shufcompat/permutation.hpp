#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "shufcompat/intset.hpp"

namespace shufcompat {

/// Raised on duplicate letters, non-positive letters or other malformed words.
class PermutationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A word of pairwise distinct positive integers.
class Permutation {
public:
    Permutation() = default;
    Permutation(std::initializer_list<int> letters);
    explicit Permutation(std::vector<int> letters);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    /// 0-based access.
    int operator[](std::size_t i) const { return letters_[i]; }
    /// 1-based access, pi_i.
    int at(std::size_t pos) const;
    const std::vector<int>& letters() const { return letters_; }
    bool contains(int a) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation&, const Permutation&) = default;

    /// "(4,1,3)"; the empty word prints as "()".
    std::string to_string() const;

private:
    std::vector<int> letters_;
};

/// Parses "(4,1,3)", "4,1,3" or "4 1 3".
Permutation parse_permutation(const std::string& text);

/// (a, pi_1, ..., pi_n). Throws PermutationError if a already occurs in pi.
Permutation head_graft(int a, const Permutation& pi);

/// (pi_2, ..., pi_n). Throws PermutationError on the empty word.
Permutation tail(const Permutation& pi);

/// Rank replacement onto letters 1..n.
Permutation standardize(const std::vector<int>& word);
inline Permutation standardize(const Permutation& p) { return standardize(p.letters()); }

bool order_isomorphic(const Permutation& a, const Permutation& b);

/// Strictly decreasing up to the minimum, strictly increasing after it.
/// Throws PermutationError on repeated values.
bool is_v_shaped(const std::vector<int>& values);

/// All standard n-permutations in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Deterministic preimage of a lacunar set under Epk:
/// n, n-1, ... placed on the positions of `lambda` left to right, the remaining
/// small values increasing on the first gap and decreasing on later gaps.
/// Throws PermutationError unless `lambda` belongs to L_n.
Permutation perm_from_epk(int n, const IntSet& lambda);

}  // namespace shufcompat
