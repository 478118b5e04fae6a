#include <doctest.h>

#include "shufcompat/expr.hpp"

using namespace shufcompat;

namespace {
QSymElement F(const Composition& a, Rational c = 1) { return QSymElement::basis_element(Basis::F, a, 8, c); }
}  // namespace

TEST_SUITE("expr") {

TEST_CASE("atoms and arithmetic") {
    CHECK(eval_qsym_expression("F[1,2]", 8) == F({1, 2}));
    CHECK(eval_qsym_expression("M[2]", 8) == F({2}) - F({1, 1}));
    CHECK(eval_qsym_expression("3/2", 8) == F({}, Rational(3, 2)));
    CHECK(eval_qsym_expression("F[]", 8) == F({}));
    CHECK(eval_qsym_expression("F[1] - F[1]", 8).is_zero());
    CHECK(eval_qsym_expression("-F[2] + 2*F[1,1]", 8) == F({1, 1}, 2) - F({2}));
    CHECK(eval_qsym_expression("F[1]*F[1]", 8) == F({2}) + F({1, 1}));
}

TEST_CASE("dendriform and runic operators") {
    CHECK(eval_qsym_expression("(F[3] - F[1,2]) < F[2]", 8) ==
          F({3, 2}) + F({2, 3}) + F({2, 2, 1}) - F({1, 2, 2}) - F({1, 1, 3}) - F({1, 1, 2, 1}));
    CHECK(eval_qsym_expression("F[1,2] bel F[2]", 8) == F({1, 4}));
    CHECK(eval_qsym_expression("F[1,2] tvi F[2]", 8) == F({1, 2, 2}));
    CHECK(eval_qsym_expression("F[1] < F[1] + F[1] >= F[1]", 8) == eval_qsym_expression("F[1]*F[1]", 8));
    CHECK(eval_qsym_expression("1 < F[2]", 8).is_zero());
}

TEST_CASE("operators on one level associate to the left") {
    CHECK(eval_qsym_expression("F[1] - F[1] - F[1]", 8) == -F({1}));
    CHECK(eval_qsym_expression("F[1] tvi F[1] bel F[1]", 8) == F({1, 2}));
}

TEST_CASE("errors carry a position") {
    CHECK_THROWS_AS(eval_qsym_expression("F[1", 8), ExprError);
    CHECK_THROWS_AS(eval_qsym_expression("G[1]", 8), ExprError);
    CHECK_THROWS_AS(eval_qsym_expression("F[1] +", 8), ExprError);
    CHECK_THROWS_AS(eval_qsym_expression("F[0]", 8), std::invalid_argument);
    CHECK_THROWS_AS(eval_qsym_expression("1/0", 8), std::invalid_argument);
    try {
        eval_qsym_expression("F[1] ? F[2]", 8);
        FAIL("no error raised");
    } catch (const ExprError& e) {
        CHECK(e.position() == 5);
    }
}

}  // TEST_SUITE
