#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "shufcompat/composition.hpp"
#include "shufcompat/intset.hpp"
#include "shufcompat/permutation.hpp"

namespace shufcompat {

enum class StatTag { Des, Pk, Lpk, Rpk, Epk, Comp, des, maj, comaj, DesMaj, inv };

inline constexpr std::array<StatTag, 11> kAllStats = {
    StatTag::Des, StatTag::Pk,  StatTag::Lpk,   StatTag::Rpk,    StatTag::Epk, StatTag::Comp,
    StatTag::des, StatTag::maj, StatTag::comaj, StatTag::DesMaj, StatTag::inv};

/// Tags whose value depends only on the descent composition.
inline constexpr std::array<StatTag, 10> kDescentStats = {
    StatTag::Des, StatTag::Pk,  StatTag::Lpk,   StatTag::Rpk,   StatTag::Epk,
    StatTag::Comp, StatTag::des, StatTag::maj, StatTag::comaj, StatTag::DesMaj};

std::string_view stat_name(StatTag tag);
std::optional<StatTag> parse_stat(std::string_view name);
bool is_descent_statistic(StatTag tag);

/// A statistic value: a number, a set, a composition or a pair (des, maj).
/// Sets compare as sorted sequences, pairs lexicographically.
using StatValue = std::variant<long long, IntSet, Composition, std::pair<long long, long long>>;

std::string to_string(const StatValue& v);

/// Evaluates a statistic by a direct scan of the word. Never throws on valid input
/// except std::overflow_error for the integer statistics.
StatValue statistic(StatTag tag, const Permutation& pi);

IntSet descent_set(const Permutation& pi);
IntSet peak_set(const Permutation& pi);
IntSet left_peak_set(const Permutation& pi);
IntSet right_peak_set(const Permutation& pi);
IntSet exterior_peak_set(const Permutation& pi);
long long inversions(const Permutation& pi);

/// (Des pi with n added) minus (Des pi + 1). Throws PermutationError on the empty word.
IntSet epk_via_des(const Permutation& pi);

/// Descent composition Comp pi.
Composition comp_of_perm(const Permutation& pi);

/// Value of a descent statistic on a composition, computed from its descent set.
/// Throws std::invalid_argument for inv.
StatValue stat_on_comp(StatTag tag, const Composition& c);

/// Same size and equal statistic values.
bool st_equivalent(StatTag tag, const Composition& j, const Composition& k);

/// Closed forms for st([A,B]) and st(A (.) B); tag in {Epk, des, maj, Lpk, Rpk, Pk}.
/// Throws std::invalid_argument for empty A or B or other tags.
StatValue stat_of_concat(StatTag tag, const Composition& a, const Composition& b);
StatValue stat_of_near_concat(StatTag tag, const Composition& a, const Composition& b);

}  // namespace shufcompat
