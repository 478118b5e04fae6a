#pragma once

#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shufcompat/intset.hpp"

namespace shufcompat {

/// A finite list of positive integers.
/// Ordered by size first, then by the binary-counter order of the descent sets.
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts);
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    friend bool operator==(const Composition& a, const Composition& b) {
        return a.parts_ == b.parts_;
    }
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b);

    /// "(1,3,2)"; the empty composition prints as "()".
    std::string to_string() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Parses "(1,3,2)", "[1,3,2]" or "1,3,2".
Composition parse_composition(const std::string& text);

/// {i1, i1+i2, ..., i1+...+i_{l-1}}.
IntSet des_of_comp(const Composition& c);

/// Inverse of des_of_comp for compositions of n. Throws unless A is a subset of [n-1].
Composition comp_of_set(int n, const IntSet& a);

/// Compositions of n, indexed by the binary counter over subsets of [n-1].
std::vector<Composition> compositions_of(int n);

/// Position of c inside compositions_of(c.size()).
unsigned long long composition_index(const Composition& c);

/// |beta| = |alpha| and Des alpha is contained in Des beta.
bool refines(const Composition& beta, const Composition& alpha);

/// [alpha, beta]: plain concatenation.
Composition concat(const Composition& a, const Composition& b);

/// alpha (.) beta: last part of alpha merged with the first part of beta.
/// Either side empty returns the other.
Composition near_concat(const Composition& a, const Composition& b);

/// K arises from J by splitting a non-first part j > 2 into (1, j-1).
bool arrow(const Composition& j, const Composition& k);

/// K arises from J by splitting a non-first part j > 2 into (2, j-2).
bool arrowM(const Composition& j, const Composition& k);

/// All pairs J -> K (resp. J ->_M K) among compositions of n, ordered by J then split position.
std::vector<std::pair<Composition, Composition>> arrow_relations(int n);
std::vector<std::pair<Composition, Composition>> arrowM_relations(int n);

/// Reversed parts.
Composition reverse(const Composition& c);

}  // namespace shufcompat
