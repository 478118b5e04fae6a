#include "shufcompat/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "shufcompat/lacunar.hpp"

namespace shufcompat {

Permutation::Permutation(std::initializer_list<int> letters)
    : Permutation(std::vector<int>(letters)) {}

Permutation::Permutation(std::vector<int> letters) : letters_(std::move(letters)) {
    std::vector<int> sorted = letters_;
    std::sort(sorted.begin(), sorted.end());
    if (!sorted.empty() && sorted.front() < 1)
        throw PermutationError("permutation letters must be positive");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw PermutationError("permutation letters must be distinct");
}

int Permutation::at(std::size_t pos) const {
    if (pos < 1 || pos > letters_.size()) throw std::out_of_range("permutation position");
    return letters_[pos - 1];
}

bool Permutation::contains(int a) const {
    return std::find(letters_.begin(), letters_.end(), a) != letters_.end();
}

std::string Permutation::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(letters_[i]);
    }
    return out + ")";
}

Permutation parse_permutation(const std::string& text) {
    std::string cleaned;
    for (char c : text) {
        if (c == '(' || c == ')' || c == '[' || c == ']' || c == ',') cleaned += ' ';
        else cleaned += c;
    }
    std::istringstream in(cleaned);
    std::vector<int> letters;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw PermutationError("bad permutation token '" + tok + "'");
        }
        if (used != tok.size()) throw PermutationError("bad permutation token '" + tok + "'");
        letters.push_back(v);
    }
    return Permutation(std::move(letters));
}

Permutation head_graft(int a, const Permutation& pi) {
    if (pi.contains(a)) throw PermutationError("head_graft: letter already present");
    std::vector<int> w;
    w.reserve(pi.size() + 1);
    w.push_back(a);
    w.insert(w.end(), pi.letters().begin(), pi.letters().end());
    return Permutation(std::move(w));
}

Permutation tail(const Permutation& pi) {
    if (pi.empty()) throw PermutationError("tail of the empty permutation");
    return Permutation(std::vector<int>(pi.letters().begin() + 1, pi.letters().end()));
}

Permutation standardize(const std::vector<int>& word) {
    std::vector<int> sorted = word;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw PermutationError("standardize: repeated letter");
    std::vector<int> out(word.size());
    for (std::size_t i = 0; i < word.size(); ++i)
        out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), word[i]) -
                                  sorted.begin()) + 1;
    return Permutation(std::move(out));
}

bool order_isomorphic(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if ((a[i] < a[j]) != (b[i] < b[j])) return false;
    return true;
}

bool is_v_shaped(const std::vector<int>& values) {
    std::set<int> seen(values.begin(), values.end());
    if (seen.size() != values.size()) throw PermutationError("is_v_shaped: repeated value");
    if (values.empty()) return true;
    const std::size_t t = static_cast<std::size_t>(
        std::min_element(values.begin(), values.end()) - values.begin());
    for (std::size_t i = 0; i + 1 <= t; ++i)
        if (!(values[i] > values[i + 1])) return false;
    for (std::size_t i = t; i + 1 < values.size(); ++i)
        if (!(values[i] < values[i + 1])) return false;
    return true;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

Permutation perm_from_epk(int n, const IntSet& lambda) {
    const bool valid = (n == 0 && lambda.empty()) ||
                       (n > 0 && !lambda.empty() && lambda.min() >= 1 && lambda.max() <= n &&
                        is_lacunar(lambda));
    if (!valid) throw PermutationError("perm_from_epk: set is not in L_n");
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    int big = n;
    for (int pos : lambda) w[pos - 1] = big--;
    int small = 1;
    // Gap intervals between consecutive peak positions, with 0 as a virtual left end.
    int prev = 0;
    bool first_gap = true;
    std::vector<int> bounds(lambda.begin(), lambda.end());
    bounds.push_back(n + 1);
    for (int b : bounds) {
        std::vector<int> slots;
        for (int p = prev + 1; p < b; ++p) slots.push_back(p);
        if (!first_gap) std::reverse(slots.begin(), slots.end());
        for (int p : slots) w[p - 1] = small++;
        first_gap = false;
        prev = b;
    }
    return Permutation(std::move(w));
}

}  // namespace shufcompat
