#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shufcompat/execution.hpp"
#include "shufcompat/permutation.hpp"
#include "shufcompat/statistics.hpp"

namespace shufcompat {

/// All interleavings of two disjoint permutations, letters of pi preferred first.
/// Throws PermutationError when pi and sigma share a letter.
std::vector<Permutation> shuffles(const Permutation& pi, const Permutation& sigma);

/// Shuffles whose first letter is pi_1 (left) or sigma_1 (right).
std::vector<Permutation> left_shuffles(const Permutation& pi, const Permutation& sigma);
std::vector<Permutation> right_shuffles(const Permutation& pi, const Permutation& sigma);

/// Checks S(pi,sigma) = S(sigma,pi), S_left(pi,sigma) = S_right(sigma,pi) and
/// S_left(pi,sigma) = S_right(tail pi, pi_1 : sigma) as sets.
/// Throws PermutationError when pi is empty or the words are not disjoint.
bool lr_recursion_check(const Permutation& pi, const Permutation& sigma);

/// Multiset of statistic values with positive multiplicities.
class StatMultiset {
public:
    void add(const StatValue& v, std::uint64_t count = 1);
    std::uint64_t count(const StatValue& v) const;
    std::uint64_t total() const;
    const std::map<StatValue, std::uint64_t>& counts() const { return counts_; }

    /// this minus other; throws std::logic_error unless other is contained in this.
    StatMultiset difference(const StatMultiset& other) const;

    friend bool operator==(const StatMultiset&, const StatMultiset&) = default;
    friend auto operator<=>(const StatMultiset&, const StatMultiset&) = default;

    /// "{{2}, {}^2}" style listing with multiplicities as exponents.
    std::string to_string() const;

private:
    std::map<StatValue, std::uint64_t> counts_;
};

StatMultiset stat_multiset(StatTag tag, const std::vector<Permutation>& perms);

enum class Notion { shuffle, left, right, weak_left, weak_right, LR, head_graft };

inline constexpr Notion kAllNotions[] = {Notion::shuffle,   Notion::left,       Notion::right,
                                         Notion::weak_left, Notion::weak_right, Notion::LR,
                                         Notion::head_graft};

std::string_view notion_name(Notion n);
std::optional<Notion> parse_notion(std::string_view name);

/// A pair (pi, sigma); for head-graft notions sigma is the one-letter word (a).
struct PairInstance {
    Permutation first;
    Permutation second;
    friend bool operator==(const PairInstance&, const PairInstance&) = default;
    std::string to_string() const;
};

/// Grouping key prescribed by a notion: statistic values, sizes and the comparison flag.
struct NotionKey {
    StatValue first_value;
    StatValue second_value;
    int first_size = 0;
    int second_size = 0;
    int flag = 0;
    friend bool operator==(const NotionKey&, const NotionKey&) = default;
    friend auto operator<=>(const NotionKey&, const NotionKey&) = default;
};

std::string describe_key(Notion notion, const NotionKey& key);

/// Whether the pair falls under the notion's hypotheses (nonempty, disjoint, and
/// pi_1 > sigma_1 or letter separation where the notion requires it).
bool admissible(Notion notion, const PairInstance& pair);

NotionKey notion_key(Notion notion, StatTag tag, const PairInstance& pair);

/// Multisets compared by the notion: one for shuffle/left/right/weak notions,
/// two (left then right shuffles) for LR, one singleton for head-graft.
std::vector<StatMultiset> notion_value(Notion notion, StatTag tag, const PairInstance& pair);

struct Violation {
    std::string key;
    PairInstance representative;
    PairInstance witness;
    std::vector<StatMultiset> representative_value;
    std::vector<StatMultiset> witness_value;
};

struct CompatReport {
    Notion notion = Notion::shuffle;
    StatTag stat = StatTag::Des;
    int size_bound = 0;
    bool verdict = true;
    /// First violation in enumeration order.
    std::optional<Violation> witness;
    /// One entry per violated key class, in order of discovery.
    std::vector<Violation> violations;
    std::uint64_t pairs_checked = 0;
    std::uint64_t key_classes = 0;
    /// Scope note: the verdict covers canonical pairs of total size <= size_bound only.
    std::string scope;
};

/// Canonical pairs for a notion with total letter count `total`, in enumeration order:
/// by |pi|, then pi lexicographically, then sigma lexicographically (for head-graft:
/// by a, then pi).
std::vector<PairInstance> canonical_pairs(Notion notion, int total);

/// Brute-force certification over all canonical pairs of total size <= size_bound.
CompatReport certify(Notion notion, StatTag tag, int size_bound,
                     Execution exec = Execution::parallel);

/// True iff both pairs are admissible, share the notion's key and have different values.
/// Works for arbitrary (non-standard) letters.
bool recheck_violation(Notion notion, StatTag tag, const PairInstance& a, const PairInstance& b);

}  // namespace shufcompat
