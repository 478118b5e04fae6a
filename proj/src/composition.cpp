#include "shufcompat/composition.hpp"

#include <algorithm>
#include <sstream>

namespace shufcompat {

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
        size_ += p;
    }
}

std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    // Binary-counter order on descent sets: walk both sets from their largest element down;
    // the set holding the largest element of the symmetric difference is larger.
    std::size_t i = a.parts_.size(), j = b.parts_.size();
    int da = a.size_, db = b.size_;
    while (true) {
        const bool more_a = i > 1, more_b = j > 1;
        if (!more_a && !more_b) return std::strong_ordering::equal;
        if (!more_b) return std::strong_ordering::greater;
        if (!more_a) return std::strong_ordering::less;
        const int na = da - a.parts_[i - 1];
        const int nb = db - b.parts_[j - 1];
        if (na != nb) return na > nb ? std::strong_ordering::greater : std::strong_ordering::less;
        da = na;
        db = nb;
        --i;
        --j;
    }
}

std::string Composition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

Composition parse_composition(const std::string& text) {
    std::string cleaned;
    for (char c : text) {
        if (c == '(' || c == ')' || c == '[' || c == ']' || c == ',') cleaned += ' ';
        else cleaned += c;
    }
    std::istringstream in(cleaned);
    std::vector<int> parts;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad composition token '" + tok + "'");
        }
        if (used != tok.size()) throw std::invalid_argument("bad composition token '" + tok + "'");
        parts.push_back(v);
    }
    return Composition(std::move(parts));
}

IntSet des_of_comp(const Composition& c) {
    std::vector<int> out;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < c.length(); ++i) {
        acc += c[i];
        out.push_back(acc);
    }
    return IntSet(std::move(out));
}

Composition comp_of_set(int n, const IntSet& a) {
    if (n < 0) throw std::invalid_argument("comp_of_set: negative size");
    if (!a.empty() && (a.min() < 1 || a.max() > n - 1))
        throw std::invalid_argument("comp_of_set: set not contained in [n-1]");
    if (n == 0) return Composition{};
    std::vector<int> parts;
    int prev = 0;
    for (int x : a) {
        parts.push_back(x - prev);
        prev = x;
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw std::invalid_argument("compositions_of: negative size");
    if (n == 0) return {Composition{}};
    if (n > 40) throw std::invalid_argument("compositions_of: size too large");
    std::vector<Composition> out;
    const unsigned long long count = 1ULL << (n - 1);
    out.reserve(count);
    for (unsigned long long mask = 0; mask < count; ++mask)
        out.push_back(comp_of_set(n, subset_from_mask(mask)));
    return out;
}

unsigned long long composition_index(const Composition& c) { return mask_of_subset(des_of_comp(c)); }

bool refines(const Composition& beta, const Composition& alpha) {
    return beta.size() == alpha.size() && is_subset(des_of_comp(alpha), des_of_comp(beta));
}

Composition concat(const Composition& a, const Composition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Composition(std::move(parts));
}

Composition near_concat(const Composition& a, const Composition& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    std::vector<int> parts = a.parts();
    parts.back() += b[0];
    parts.insert(parts.end(), b.parts().begin() + 1, b.parts().end());
    return Composition(std::move(parts));
}

namespace {

bool split_relation(const Composition& j, const Composition& k, int head) {
    if (k.length() != j.length() + 1) return false;
    for (std::size_t l = 1; l < j.length(); ++l) {
        if (j[l] <= 2) continue;
        std::vector<int> parts = j.parts();
        parts[l] = j[l] - head;
        parts.insert(parts.begin() + static_cast<std::ptrdiff_t>(l), head);
        if (parts == k.parts()) return true;
    }
    return false;
}

std::vector<std::pair<Composition, Composition>> split_relations(int n, int head) {
    std::vector<std::pair<Composition, Composition>> out;
    for (const auto& j : compositions_of(n)) {
        for (std::size_t l = 1; l < j.length(); ++l) {
            if (j[l] <= 2) continue;
            std::vector<int> parts = j.parts();
            parts[l] = j[l] - head;
            parts.insert(parts.begin() + static_cast<std::ptrdiff_t>(l), head);
            out.emplace_back(j, Composition(std::move(parts)));
        }
    }
    return out;
}

}  // namespace

bool arrow(const Composition& j, const Composition& k) { return split_relation(j, k, 1); }
bool arrowM(const Composition& j, const Composition& k) { return split_relation(j, k, 2); }

std::vector<std::pair<Composition, Composition>> arrow_relations(int n) {
    return split_relations(n, 1);
}
std::vector<std::pair<Composition, Composition>> arrowM_relations(int n) {
    return split_relations(n, 2);
}

Composition reverse(const Composition& c) {
    std::vector<int> parts = c.parts();
    std::reverse(parts.begin(), parts.end());
    return Composition(std::move(parts));
}

}  // namespace shufcompat
