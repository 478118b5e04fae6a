#include "shufcompat/intset.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace shufcompat {

IntSet::IntSet(std::initializer_list<int> xs) : IntSet(std::vector<int>(xs)) {}

IntSet::IntSet(std::vector<int> xs) : elems_(std::move(xs)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool IntSet::contains(int x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

int IntSet::min() const {
    if (elems_.empty()) throw std::logic_error("min of empty set");
    return elems_.front();
}

int IntSet::max() const {
    if (elems_.empty()) throw std::logic_error("max of empty set");
    return elems_.back();
}

long long IntSet::sum() const {
    long long s = 0;
    for (int x : elems_) s += x;
    return s;
}

void IntSet::insert(int x) {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
    if (it == elems_.end() || *it != x) elems_.insert(it, x);
}

void IntSet::erase(int x) {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
    if (it != elems_.end() && *it == x) elems_.erase(it);
}

std::string IntSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(elems_[i]);
    }
    return out + "}";
}

IntSet set_union(const IntSet& a, const IntSet& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return IntSet(std::move(out));
}

IntSet set_intersection(const IntSet& a, const IntSet& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return IntSet(std::move(out));
}

IntSet set_difference(const IntSet& a, const IntSet& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return IntSet(std::move(out));
}

IntSet symmetric_difference(const IntSet& a, const IntSet& b) {
    std::vector<int> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return IntSet(std::move(out));
}

bool is_subset(const IntSet& a, const IntSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

IntSet shift(const IntSet& s, int p) {
    std::vector<int> out;
    out.reserve(s.size());
    for (int x : s) out.push_back(x + p);
    return IntSet(std::move(out));
}

IntSet interval(int lo, int hi) {
    std::vector<int> out;
    for (int i = lo; i <= hi; ++i) out.push_back(i);
    return IntSet(std::move(out));
}

IntSet subset_from_mask(unsigned long long mask) {
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1ULL) out.push_back(i + 1);
    return IntSet(std::move(out));
}

unsigned long long mask_of_subset(const IntSet& s) {
    unsigned long long mask = 0;
    for (int x : s) {
        if (x < 1 || x > 64) throw std::out_of_range("subset element outside [1,64]");
        mask |= 1ULL << (x - 1);
    }
    return mask;
}

}  // namespace shufcompat
