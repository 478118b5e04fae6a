#include "shufcompat/shuffle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace shufcompat {

namespace {

void require_disjoint(const Permutation& pi, const Permutation& sigma) {
    for (int a : pi.letters())
        if (sigma.contains(a)) throw PermutationError("shuffle of non-disjoint permutations");
}

void interleave(const std::vector<int>& p, std::size_t i, const std::vector<int>& s, std::size_t j,
                std::vector<int>& cur, std::vector<Permutation>& out) {
    if (i == p.size() && j == s.size()) {
        out.emplace_back(cur);
        return;
    }
    if (i < p.size()) {
        cur.push_back(p[i]);
        interleave(p, i + 1, s, j, cur, out);
        cur.pop_back();
    }
    if (j < s.size()) {
        cur.push_back(s[j]);
        interleave(p, i, s, j + 1, cur, out);
        cur.pop_back();
    }
}

std::set<Permutation> as_set(const std::vector<Permutation>& v) { return {v.begin(), v.end()}; }

}  // namespace

std::vector<Permutation> shuffles(const Permutation& pi, const Permutation& sigma) {
    require_disjoint(pi, sigma);
    std::vector<Permutation> out;
    std::vector<int> cur;
    cur.reserve(pi.size() + sigma.size());
    interleave(pi.letters(), 0, sigma.letters(), 0, cur, out);
    return out;
}

std::vector<Permutation> left_shuffles(const Permutation& pi, const Permutation& sigma) {
    std::vector<Permutation> all = shuffles(pi, sigma);
    std::vector<Permutation> out;
    if (pi.empty()) return out;
    for (auto& t : all)
        if (t[0] == pi[0]) out.push_back(std::move(t));
    return out;
}

std::vector<Permutation> right_shuffles(const Permutation& pi, const Permutation& sigma) {
    std::vector<Permutation> all = shuffles(pi, sigma);
    std::vector<Permutation> out;
    if (sigma.empty()) return out;
    for (auto& t : all)
        if (t[0] == sigma[0]) out.push_back(std::move(t));
    return out;
}

bool lr_recursion_check(const Permutation& pi, const Permutation& sigma) {
    require_disjoint(pi, sigma);
    if (pi.empty()) throw PermutationError("lr_recursion_check: pi must be nonempty");
    const bool swap_ok = as_set(shuffles(pi, sigma)) == as_set(shuffles(sigma, pi)) &&
                         as_set(left_shuffles(pi, sigma)) == as_set(right_shuffles(sigma, pi));
    const bool rec_ok = as_set(left_shuffles(pi, sigma)) ==
                        as_set(right_shuffles(tail(pi), head_graft(pi[0], sigma)));
    return swap_ok && rec_ok;
}

void StatMultiset::add(const StatValue& v, std::uint64_t count) {
    if (count) counts_[v] += count;
}

std::uint64_t StatMultiset::count(const StatValue& v) const {
    auto it = counts_.find(v);
    return it == counts_.end() ? 0 : it->second;
}

std::uint64_t StatMultiset::total() const {
    std::uint64_t t = 0;
    for (const auto& [v, c] : counts_) t += c;
    return t;
}

StatMultiset StatMultiset::difference(const StatMultiset& other) const {
    StatMultiset out = *this;
    for (const auto& [v, c] : other.counts_) {
        auto it = out.counts_.find(v);
        if (it == out.counts_.end() || it->second < c)
            throw std::logic_error("multiset difference: subtrahend not contained");
        it->second -= c;
        if (it->second == 0) out.counts_.erase(it);
    }
    return out;
}

std::string StatMultiset::to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [v, c] : counts_) {
        if (!first) out += ", ";
        first = false;
        out += shufcompat::to_string(v);
        if (c > 1) out += "^" + std::to_string(c);
    }
    return out + "}";
}

StatMultiset stat_multiset(StatTag tag, const std::vector<Permutation>& perms) {
    StatMultiset ms;
    for (const auto& p : perms) ms.add(statistic(tag, p));
    return ms;
}

std::string_view notion_name(Notion n) {
    switch (n) {
        case Notion::shuffle: return "shuffle";
        case Notion::left: return "left";
        case Notion::right: return "right";
        case Notion::weak_left: return "weak-left";
        case Notion::weak_right: return "weak-right";
        case Notion::LR: return "LR";
        case Notion::head_graft: return "head-graft";
    }
    return "?";
}

std::optional<Notion> parse_notion(std::string_view name) {
    for (Notion n : kAllNotions)
        if (notion_name(n) == name) return n;
    return std::nullopt;
}

std::string PairInstance::to_string() const {
    return "(" + first.to_string() + ", " + second.to_string() + ")";
}

std::string describe_key(Notion notion, const NotionKey& key) {
    if (notion == Notion::head_graft)
        return "st pi=" + shufcompat::to_string(key.first_value) +
               " |pi|=" + std::to_string(key.first_size) + " [a>pi1]=" + std::to_string(key.flag);
    std::string out = "st pi=" + shufcompat::to_string(key.first_value) +
                      " st sigma=" + shufcompat::to_string(key.second_value) +
                      " |pi|=" + std::to_string(key.first_size) +
                      " |sigma|=" + std::to_string(key.second_size);
    if (notion == Notion::LR) out += " [pi1>sigma1]=" + std::to_string(key.flag);
    return out;
}

bool admissible(Notion notion, const PairInstance& pair) {
    const Permutation& p = pair.first;
    const Permutation& s = pair.second;
    for (int a : p.letters())
        if (s.contains(a)) return false;
    switch (notion) {
        case Notion::shuffle: return true;
        case Notion::LR: return !p.empty() && !s.empty();
        case Notion::left:
        case Notion::right: return !p.empty() && !s.empty() && p[0] > s[0];
        case Notion::weak_left:
        case Notion::weak_right: {
            if (p.empty() || s.empty()) return false;
            return *std::min_element(p.letters().begin(), p.letters().end()) >
                   *std::max_element(s.letters().begin(), s.letters().end());
        }
        case Notion::head_graft: return !p.empty() && s.size() == 1;
    }
    return false;
}

NotionKey notion_key(Notion notion, StatTag tag, const PairInstance& pair) {
    NotionKey key;
    key.first_value = statistic(tag, pair.first);
    key.first_size = static_cast<int>(pair.first.size());
    if (notion == Notion::head_graft) {
        key.second_value = 0LL;
        key.flag = pair.second[0] > pair.first[0] ? 1 : 0;
        return key;
    }
    key.second_value = statistic(tag, pair.second);
    key.second_size = static_cast<int>(pair.second.size());
    if (notion == Notion::LR) key.flag = pair.first[0] > pair.second[0] ? 1 : 0;
    return key;
}

std::vector<StatMultiset> notion_value(Notion notion, StatTag tag, const PairInstance& pair) {
    const Permutation& p = pair.first;
    const Permutation& s = pair.second;
    switch (notion) {
        case Notion::shuffle: return {stat_multiset(tag, shuffles(p, s))};
        case Notion::left:
        case Notion::weak_left: return {stat_multiset(tag, left_shuffles(p, s))};
        case Notion::right:
        case Notion::weak_right: return {stat_multiset(tag, right_shuffles(p, s))};
        case Notion::LR:
            return {stat_multiset(tag, left_shuffles(p, s)), stat_multiset(tag, right_shuffles(p, s))};
        case Notion::head_graft: {
            StatMultiset ms;
            ms.add(statistic(tag, head_graft(s[0], p)));
            return {ms};
        }
    }
    throw std::logic_error("unknown notion");
}

}  // namespace shufcompat
