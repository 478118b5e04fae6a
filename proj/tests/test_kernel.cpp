#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "oracles.hpp"
#include "shufcompat/kernel.hpp"
#include "shufcompat/lacunar.hpp"
#include "shufcompat/shuffle.hpp"

using namespace shufcompat;

namespace {

constexpr int kDeg = 8;
QSymElement F(const Composition& a, Rational c = 1) { return QSymElement::basis_element(Basis::F, a, kDeg, c); }
QSymElement M(const Composition& a, Rational c = 1) { return QSymElement::basis_element(Basis::M, a, kDeg, c); }

std::size_t distinct_values(StatTag t, int n) {
    std::set<StatValue> seen;
    for (const auto& c : compositions_of(n)) seen.insert(stat_on_comp(t, c));
    return seen.size();
}

}  // namespace

TEST_SUITE("kernel_lab") {

TEST_CASE("linear algebra core") {
    EchelonSpan s(3);
    CHECK(s.insert({1, 2, 3}));
    CHECK(s.insert({2, 4, 7}));
    CHECK_FALSE(s.insert({3, 6, 10}));
    CHECK(s.rank() == 2);
    CHECK(s.contains({0, 0, 5}));
    CHECK_FALSE(s.contains({0, 1, 0}));
    auto ns = s.null_space();
    REQUIRE(ns.size() == 1);
    for (const auto& row : s.rows()) {
        Rational dot = 0;
        for (std::size_t i = 0; i < 3; ++i) dot += row[i] * ns[0][i];
        CHECK(dot == 0);
    }
    CHECK(matrix_rank({{1, 1}, {2, 2}, {0, 0}}, 2) == 1);
    EchelonSpan t(3);
    t.insert({3, 6, 10});
    t.insert({0, 0, 1});
    CHECK(s == t);
}

TEST_CASE("kernel components: examples and the dimension formula") {
    for (int n = 0; n <= 6; ++n) CHECK(kernel_component(StatTag::Des, n).dimension() == 0);
    CHECK(kernel_component(StatTag::Epk, 1).dimension() == 0);
    CHECK(kernel_component(StatTag::Epk, 4).dimension() == 8 - distinct_values(StatTag::Epk, 4));
    CHECK(kernel_component(StatTag::Epk, 4).contains(F({1, 3}) - F({1, 1, 2})));
    CHECK_THROWS_AS(kernel_component(StatTag::inv, 3), std::invalid_argument);
    for (StatTag t : kDescentStats)
        for (int n = 1; n <= 7; ++n) {
            CAPTURE(stat_name(t));
            CAPTURE(n);
            REQUIRE(kernel_component(t, n).dimension() == (1u << (n - 1)) - distinct_values(t, n));
            REQUIRE(shuffle_algebra_dimension(t, n) == distinct_values(t, n));
            REQUIRE(equivalence_classes(t, n).size() == distinct_values(t, n));
        }
}

TEST_CASE("shuffle algebra dimensions") {
    CHECK(shuffle_algebra_dimension(StatTag::Epk, 3) == 4);
    CHECK(shuffle_algebra_dimension(StatTag::Epk, 1) == 1);
    for (int n = 1; n <= 7; ++n) CHECK(shuffle_algebra_dimension(StatTag::Des, n) == (1u << (n - 1)));
    for (int n = 1; n <= 9; ++n) {
        CAPTURE(n);
        CHECK(shuffle_algebra_dimension(StatTag::Epk, n) == fibonacci(n + 2) - 1);
        CHECK(shuffle_algebra_dimension(StatTag::Epk, n) == enumerate_Ln(n).size());
    }
}

TEST_CASE("Epk kernel generating sets") {
    auto f4 = epk_f_generators(4), m4 = epk_m_generators(4);
    CHECK(f4.dimension() == 1);
    CHECK(f4.contains(F({1, 3}) - F({1, 1, 2})));
    CHECK(m4.dimension() == 1);
    CHECK(m4.contains(m_to_f(M({1, 3}) + M({1, 2, 1}))));
    CHECK(epk_f_generators(3).dimension() == 0);
    CHECK(epk_m_generators(3).dimension() == 0);
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        auto k = kernel_component(StatTag::Epk, n);
        REQUIRE(epk_f_generators(n) == k);
        REQUIRE(epk_m_generators(n) == k);
    }
}

TEST_CASE("M through F identities") {
    for (int n = 1; n <= 6; ++n) CHECK(m_through_f_checks(n));
}

TEST_CASE("M-binomial search") {
    for (int n = 1; n <= 6; ++n) {
        auto r = is_m_binomial(StatTag::Epk, n);
        CHECK(r.certified);
        EchelonSpan span(1u << (n - 1));
        for (const auto& e : r.certificate) {
            CHECK(e.terms().size() <= 2);
            CHECK(kernel_component(StatTag::Epk, n).contains(e));
            span.insert(coordinates(e, n, Basis::F));
        }
        CHECK(span == kernel_component(StatTag::Epk, n).span);
        CHECK(is_m_binomial(StatTag::Des, n).certified);
        CHECK(is_m_binomial(StatTag::des, n).certified);
    }
    auto maj4 = is_m_binomial(StatTag::maj, 4);
    CHECK_FALSE(maj4.certified);
    CHECK_FALSE(maj4.note.empty());
    // (des,maj) has a trivial kernel in degree 4; the obstruction starts in degree 5.
    CHECK(is_m_binomial(StatTag::DesMaj, 4).certified);
    CHECK_FALSE(is_m_binomial(StatTag::DesMaj, 5).certified);
    for (StatTag t : {StatTag::Lpk, StatTag::Rpk, StatTag::Pk})
        for (int n = 1; n <= 7; ++n) CHECK(is_m_binomial(t, n).certified);
}

TEST_CASE("ideal verdicts from the dendriform statements") {
    CHECK(is_op_ideal(StatTag::Epk, IdealOp::prec, Side::both, 6).holds);

    auto maj = is_op_ideal(StatTag::maj, IdealOp::prec, Side::left, 5);
    CHECK_FALSE(maj.holds);
    REQUIRE(maj.witness.has_value());
    CHECK_FALSE(kernel_component(StatTag::maj, maj.witness->result.degree()).contains(maj.witness->result));
    auto m = F({1, 1, 2}) - F({3, 1});
    CHECK(kernel_component(StatTag::maj, 4).contains(m));
    CHECK(prec(F({1}), m) == F({1, 1, 1, 2}) - F({1, 3, 1}));
    CHECK_FALSE(kernel_component(StatTag::maj, 5).contains(prec(F({1}), m)));

    auto rpk = is_op_ideal(StatTag::Rpk, IdealOp::prec, Side::right, 5);
    CHECK_FALSE(rpk.holds);
    auto r = F({1, 2}) - F({3});
    CHECK(kernel_component(StatTag::Rpk, 3).contains(r));
    CHECK_FALSE(kernel_component(StatTag::Rpk, 4).contains(prec(r, F({1}))));
}

TEST_CASE("ideal matrix rows") {
    auto mat = ideal_matrix(6);
    std::function<bool(StatTag, IdealOp, Side)> cell = [&](StatTag t, IdealOp op, Side s) -> bool {
        if (s == Side::both) return cell(t, op, Side::left) && cell(t, op, Side::right);
        std::size_t row = std::find(mat.rows.begin(), mat.rows.end(), t) - mat.rows.begin();
        std::size_t col = std::find(mat.columns.begin(), mat.columns.end(), std::make_pair(op, s)) - mat.columns.begin();
        REQUIRE(row < mat.rows.size());
        REQUIRE(col < mat.columns.size());
        return mat.cells[row][col].holds;
    };
    CHECK(mat.criterion_agrees);
    CHECK(cell(StatTag::Lpk, IdealOp::tvi, Side::left));
    CHECK_FALSE(cell(StatTag::Lpk, IdealOp::tvi, Side::right));
    CHECK(cell(StatTag::Lpk, IdealOp::bel, Side::both));
    CHECK(cell(StatTag::Lpk, IdealOp::prec, Side::both));
    CHECK(cell(StatTag::Lpk, IdealOp::succeq, Side::both));
    CHECK(cell(StatTag::Pk, IdealOp::tvi, Side::left));
    CHECK(cell(StatTag::Pk, IdealOp::bel, Side::right));
    CHECK(cell(StatTag::Pk, IdealOp::prec, Side::left));
    CHECK(cell(StatTag::Pk, IdealOp::succeq, Side::left));
    CHECK_FALSE(cell(StatTag::Pk, IdealOp::prec, Side::both));
    for (IdealOp op : kIdealOps) CHECK(cell(StatTag::Epk, op, Side::both));
    for (IdealOp op : kIdealOps) CHECK(cell(StatTag::Des, op, Side::both));

    std::string tsv = ideal_matrix_tsv(mat);
    CHECK(tsv.find("Epk") != std::string::npos);
    CHECK(tsv.find("false(w") != std::string::npos);
}

TEST_CASE("ideal verdicts against the certifier and the implication theorems, scale 6") {
    for (StatTag t : kDescentStats) {
        CAPTURE(stat_name(t));
        auto ideal = [&](IdealOp op, Side s) { return is_op_ideal(t, op, s, 6).holds; };
        bool product = ideal(IdealOp::product, Side::both);
        CHECK(product == certify(Notion::shuffle, t, 6).verdict);
        bool prec_ideal = ideal(IdealOp::prec, Side::both), succeq_ideal = ideal(IdealOp::succeq, Side::both);
        CHECK(prec_ideal == certify(Notion::left, t, 6).verdict);
        CHECK(prec_ideal == certify(Notion::weak_left, t, 6).verdict);
        CHECK(succeq_ideal == certify(Notion::right, t, 6).verdict);
        CHECK(succeq_ideal == certify(Notion::weak_right, t, 6).verdict);
        if (ideal(IdealOp::bel, Side::left) && product) CHECK(ideal(IdealOp::prec, Side::right));
        if (ideal(IdealOp::tvi, Side::left)) CHECK(ideal(IdealOp::succeq, Side::left));
        if (prec_ideal && succeq_ideal) CHECK(product);
        for (IdealOp op : {IdealOp::bel, IdealOp::tvi})
            for (Side s : {Side::left, Side::right})
                CHECK(ideal(op, s) == runic_composition_criterion(t, op, s, 6));
    }
}

TEST_CASE("serial and parallel ideal checks agree") {
    for (StatTag t : {StatTag::maj, StatTag::Rpk, StatTag::Epk})
        for (IdealOp op : kIdealOps) {
            auto s = is_op_ideal(t, op, Side::both, 5, Execution::serial);
            auto p = is_op_ideal(t, op, Side::both, 5, Execution::parallel);
            REQUIRE(s.holds == p.holds);
            if (!s.holds) {
                CHECK(s.witness->generator == p.witness->generator);
                CHECK(s.witness->multiplier == p.witness->multiplier);
                CHECK(s.witness->side == p.witness->side);
            }
        }
}

TEST_CASE("name parsing") {
    for (IdealOp op : kIdealOps) CHECK(parse_op(op_name(op)) == op);
    for (Side s : {Side::left, Side::right, Side::both}) CHECK(parse_side(side_name(s)) == s);
    CHECK_FALSE(parse_op("frob").has_value());
}

}  // TEST_SUITE
