#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"
#include "shufcompat/shuffle.hpp"
#include "shufcompat/statistics.hpp"

using namespace shufcompat;

namespace {

std::set<Permutation> as_set(const std::vector<Permutation>& v) { return {v.begin(), v.end()}; }

std::uint64_t binomial(int n, int k) {
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Disjoint standard pairs: a permutation of [total] split after m letters.
std::vector<std::pair<Permutation, Permutation>> split_pairs(int total) {
    std::vector<std::pair<Permutation, Permutation>> out;
    for (const auto& w : oracle::permutations_of(total))
        for (int m = 0; m <= total; ++m)
            out.emplace_back(Permutation(std::vector<int>(w.begin(), w.begin() + m)),
                             Permutation(std::vector<int>(w.begin() + m, w.end())));
    return out;
}

}  // namespace

TEST_SUITE("shuffle_engine") {

TEST_CASE("shuffle displays") {
    Permutation a{3, 1}, b{2, 6};
    CHECK(shuffles(a, b) == std::vector<Permutation>{{3, 1, 2, 6}, {3, 2, 1, 6}, {3, 2, 6, 1},
                                                     {2, 3, 1, 6}, {2, 3, 6, 1}, {2, 6, 3, 1}});
    CHECK(as_set(left_shuffles(a, b)) == std::set<Permutation>{{3, 1, 2, 6}, {3, 2, 1, 6}, {3, 2, 6, 1}});
    CHECK(as_set(right_shuffles(a, b)) == std::set<Permutation>{{2, 3, 1, 6}, {2, 3, 6, 1}, {2, 6, 3, 1}});
    CHECK(right_shuffles(Permutation(), Permutation{1, 3}) == std::vector<Permutation>{{1, 3}});
    CHECK(left_shuffles(Permutation(), Permutation{1, 3}).empty());
    CHECK(shuffles(Permutation(), Permutation{4, 2}) == std::vector<Permutation>{{4, 2}});
    CHECK(as_set(shuffles(Permutation{1}, Permutation{2})) == std::set<Permutation>{{1, 2}, {2, 1}});
}

TEST_CASE("lr_recursion_check examples") {
    CHECK(lr_recursion_check({3, 1}, {2, 6}));
    CHECK(lr_recursion_check({1}, {2}));
    CHECK(lr_recursion_check({5, 1}, {4, 2, 3}));
}

TEST_CASE("property: shuffle sets against the position-mask oracle, total <= 8") {
    for (int total = 0; total <= 8; ++total)
        for (const auto& [p, s] : split_pairs(total)) {
            auto sh = shuffles(p, s);
            REQUIRE(sh.size() == binomial(total, static_cast<int>(p.size())));
            auto sorted = sh;
            std::sort(sorted.begin(), sorted.end());
            REQUIRE(sorted == oracle::shuffles(p, s));
            REQUIRE(as_set(sh) == as_set(shuffles(s, p)));
            if (total <= 6) {
                REQUIRE(as_set(left_shuffles(p, s)) == as_set(right_shuffles(s, p)));
                if (total > 0) REQUIRE(left_shuffles(p, s).size() + right_shuffles(p, s).size() == sh.size());
                if (!p.empty() && !s.empty()) REQUIRE(lr_recursion_check(p, s));
            }
        }
}

TEST_CASE("stat multisets") {
    StatMultiset two, empty;
    two.add(IntSet{2});
    empty.add(IntSet{});
    CHECK(stat_multiset(StatTag::Pk, right_shuffles({4, 2, 3}, {1})) == two);
    CHECK(stat_multiset(StatTag::Pk, right_shuffles({2, 3, 4}, {1})) == empty);
    CHECK(stat_multiset(StatTag::Des, {Permutation()}) == empty);
    CHECK(two.total() == 1);
    CHECK_THROWS_AS(empty.difference(two), std::logic_error);
}

TEST_CASE("property: left-shuffle multiset = all minus right, every statistic, sizes <= 6") {
    for (int total = 2; total <= 6; ++total)
        for (const auto& [p, s] : split_pairs(total)) {
            if (p.empty() || s.empty() || p.size() > 6 || s.size() > 6) continue;
            for (StatTag t : kAllStats) {
                auto all = stat_multiset(t, shuffles(p, s));
                REQUIRE(stat_multiset(t, left_shuffles(p, s)) == all.difference(stat_multiset(t, right_shuffles(p, s))));
            }
        }
}

TEST_CASE("notion names round-trip") {
    for (Notion n : kAllNotions) CHECK(parse_notion(notion_name(n)) == n);
    CHECK_FALSE(parse_notion("sideways").has_value());
}

TEST_CASE("certify: the reference verdicts and witnesses") {
    auto lr = certify(Notion::LR, StatTag::Pk, 4);
    CHECK_FALSE(lr.verdict);
    PairInstance a{{4, 2, 3}, {1}}, b{{2, 3, 4}, {1}};
    CHECK(recheck_violation(Notion::LR, StatTag::Pk, a, b));
    auto key = describe_key(Notion::LR, notion_key(Notion::LR, StatTag::Pk, a));
    CHECK(std::any_of(lr.violations.begin(), lr.violations.end(), [&](const Violation& v) { return v.key == key; }));

    auto hg = certify(Notion::head_graft, StatTag::maj, 5);
    CHECK_FALSE(hg.verdict);
    CHECK(recheck_violation(Notion::head_graft, StatTag::maj, {{5, 4, 2, 3}, {1}}, {{3, 4, 5, 2}, {1}}));

    CHECK(certify(Notion::shuffle, StatTag::Epk, 6).verdict);
    CHECK_FALSE(certify(Notion::shuffle, StatTag::inv, 4).verdict);
}

TEST_CASE("certify: every reported violation re-checks") {
    for (StatTag t : {StatTag::Pk, StatTag::maj, StatTag::Rpk, StatTag::inv})
        for (Notion n : kAllNotions) {
            auto rep = certify(n, t, 5);
            CHECK(rep.verdict == rep.violations.empty());
            CHECK(rep.witness.has_value() == !rep.verdict);
            for (const auto& v : rep.violations) REQUIRE(recheck_violation(n, t, v.representative, v.witness));
        }
}

TEST_CASE("certify: serial and parallel runs agree") {
    for (StatTag t : {StatTag::Pk, StatTag::Epk, StatTag::maj}) {
        auto s = certify(Notion::LR, t, 6, Execution::serial);
        auto p = certify(Notion::LR, t, 6, Execution::parallel);
        CHECK(s.verdict == p.verdict);
        CHECK(s.pairs_checked == p.pairs_checked);
        CHECK(s.key_classes == p.key_classes);
        REQUIRE(s.violations.size() == p.violations.size());
        for (std::size_t i = 0; i < s.violations.size(); ++i) {
            CHECK(s.violations[i].key == p.violations[i].key);
            CHECK(s.violations[i].witness == p.violations[i].witness);
        }
    }
}

TEST_CASE("recheck_violation rejects pairs outside one key class") {
    CHECK_FALSE(recheck_violation(Notion::shuffle, StatTag::Des, {{1}, {2}}, {{1, 2}, {3}}));
    CHECK_FALSE(recheck_violation(Notion::LR, StatTag::Epk, {{4, 2, 3}, {1}}, {{2, 3, 4}, {1}}));
}

TEST_CASE("canonical pairs") {
    auto sh = canonical_pairs(Notion::shuffle, 2);
    CHECK(sh.size() == 6);  // 2 permutations x 3 split points
    for (const auto& p : canonical_pairs(Notion::LR, 4)) CHECK((!p.first.empty() && !p.second.empty()));
    for (const auto& p : canonical_pairs(Notion::head_graft, 3)) CHECK(p.second.size() == 1);
    for (const auto& p : canonical_pairs(Notion::weak_left, 4))
        CHECK(*std::min_element(p.first.letters().begin(), p.first.letters().end()) >
              *std::max_element(p.second.letters().begin(), p.second.letters().end()));
}

TEST_CASE("certifier cross-checks and the verdict matrix at size 6") {
    std::map<std::pair<StatTag, Notion>, bool> v;
    for (StatTag t : kDescentStats)
        for (Notion n : kAllNotions) v[{t, n}] = certify(n, t, 6).verdict;
    for (StatTag t : kDescentStats) {
        CAPTURE(stat_name(t));
        CHECK((v[{t, Notion::left}] && v[{t, Notion::right}]) == v[{t, Notion::LR}]);
        if (v[{t, Notion::shuffle}]) {
            CHECK(v[{t, Notion::LR}] == v[{t, Notion::left}]);
            CHECK(v[{t, Notion::left}] == v[{t, Notion::right}]);
            CHECK(v[{t, Notion::right}] == v[{t, Notion::head_graft}]);
            if (v[{t, Notion::head_graft}]) CHECK(v[{t, Notion::LR}]);
        }
    }
    for (StatTag t : {StatTag::Des, StatTag::Lpk, StatTag::Epk, StatTag::des, StatTag::comaj, StatTag::DesMaj}) {
        CAPTURE(stat_name(t));
        for (Notion n : {Notion::shuffle, Notion::left, Notion::right, Notion::LR, Notion::head_graft})
            CHECK(v[{t, n}]);
    }
    for (StatTag t : {StatTag::Pk, StatTag::Rpk, StatTag::maj}) CHECK_FALSE(v[{t, Notion::head_graft}]);
    CHECK(certify(Notion::weak_left, StatTag::inv, 6).verdict);
    CHECK(certify(Notion::weak_right, StatTag::inv, 6).verdict);
    CHECK_FALSE(certify(Notion::shuffle, StatTag::inv, 6).verdict);
}

}  // TEST_SUITE
