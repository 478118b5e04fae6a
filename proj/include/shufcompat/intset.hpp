#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace shufcompat {

/// Finite set of integers, stored as a strictly increasing vector.
/// Comparison operators compare the sorted element sequences lexicographically.
class IntSet {
public:
    IntSet() = default;
    IntSet(std::initializer_list<int> xs);
    explicit IntSet(std::vector<int> xs);

    const std::vector<int>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    bool contains(int x) const;
    int min() const;
    int max() const;
    long long sum() const;

    void insert(int x);
    void erase(int x);

    std::vector<int>::const_iterator begin() const { return elems_.begin(); }
    std::vector<int>::const_iterator end() const { return elems_.end(); }

    friend bool operator==(const IntSet&, const IntSet&) = default;
    friend std::strong_ordering operator<=>(const IntSet&, const IntSet&) = default;

    /// "{1,4,6}"; the empty set prints as "{}".
    std::string to_string() const;

private:
    std::vector<int> elems_;
};

IntSet set_union(const IntSet& a, const IntSet& b);
IntSet set_intersection(const IntSet& a, const IntSet& b);
IntSet set_difference(const IntSet& a, const IntSet& b);
IntSet symmetric_difference(const IntSet& a, const IntSet& b);
bool is_subset(const IntSet& a, const IntSet& b);

/// Elementwise translation S + p.
IntSet shift(const IntSet& s, int p);

/// {lo, lo+1, ..., hi}; empty when hi < lo.
IntSet interval(int lo, int hi);

/// Subset of [n-1] with bit (i-1) of `mask` selecting i.
IntSet subset_from_mask(unsigned long long mask);
unsigned long long mask_of_subset(const IntSet& s);

}  // namespace shufcompat
