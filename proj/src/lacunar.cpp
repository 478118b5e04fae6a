#include "shufcompat/lacunar.hpp"

#include <algorithm>
#include <stdexcept>

namespace shufcompat {

bool is_lacunar(const IntSet& s) {
    const auto& e = s.elements();
    for (std::size_t i = 1; i < e.size(); ++i)
        if (e[i] == e[i - 1] + 1) return false;
    return true;
}

std::vector<IntSet> enumerate_Ln(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_Ln: negative n");
    if (n == 0) return {IntSet{}};
    std::vector<IntSet> out;
    // Lacunar subsets of [n] via DFS on the next admissible element.
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        for (int x = next; x <= n; ++x) {
            cur.push_back(x);
            out.emplace_back(cur);
            self(self, x + 2);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end(), SetOrderLess{});
    return out;
}

std::uint64_t fibonacci(int k) {
    if (k < 0) throw std::invalid_argument("fibonacci: negative index");
    if (k == 0) return 0;
    std::uint64_t a = 0, b = 1;
    for (int i = 1; i < k; ++i) {
        std::uint64_t c;
        if (__builtin_add_overflow(a, b, &c)) throw std::overflow_error("fibonacci overflow");
        a = b;
        b = c;
    }
    return b;
}

std::strong_ordering set_compare(const IntSet& a, const IntSet& b) {
    if (a == b) return std::strong_ordering::equal;
    const IntSet d = symmetric_difference(a, b);
    return a.contains(d.min()) ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace shufcompat
