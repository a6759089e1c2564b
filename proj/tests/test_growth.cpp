#include "pathcount/growth.hpp"
#include "pathcount/special_numbers.hpp"

#include <doctest.h>

#include <vector>

using namespace pathcount;

TEST_SUITE("map_family") {
    TEST_CASE("enumerates every label sequence once") {
        MapFamily family({2, 1});
        CHECK(family.steps() == 3);
        CHECK(family.size() == 3);
        std::vector<std::vector<int>> seen;
        family.for_each([&](const std::vector<int>& f) { seen.push_back(f); });
        REQUIRE(seen.size() == 3);
        CHECK(seen[0] == std::vector<int>{1, 1, 2});
        CHECK(seen[1] == std::vector<int>{1, 2, 1});
        CHECK(seen[2] == std::vector<int>{2, 1, 1});
    }

    TEST_CASE("empty prefix yields the single empty map") {
        MapFamily family({0, 0, 0});
        CHECK(family.steps() == 0);
        CHECK(family.size() == 1);
        int calls = 0;
        family.for_each([&](const std::vector<int>& f) {
            CHECK(f.empty());
            ++calls;
        });
        CHECK(calls == 1);
    }

    TEST_CASE("count matches the multinomial for a mixed prefix") {
        MapFamily family({2, 0, 3});
        CHECK(family.size() == 10);
        int calls = 0;
        family.for_each([&](const std::vector<int>&) { ++calls; });
        CHECK(calls == 10);
    }
}

TEST_SUITE("b_closed_form") {
    TEST_CASE("frozen reference values") {
        CHECK(b_closed_form(ParamVec({1, 1}), {1}) == 4);
        CHECK(b_closed_form(ParamVec({1, 1, 1}), {1, 1}) == 54);
        CHECK(b_closed_form(ParamVec({2, 3}), {4}) == 168070);
        CHECK(b_closed_form(ParamVec({1, 2, 1}), {1, 1}) == Rational(153, 2));
        CHECK(b_closed_form(ParamVec({2, 0, 3, 1}), {1, 1, 1}) == Rational(6976, 3));
        CHECK(b_closed_form(ParamVec({1, 1}), {0}) == 1);
    }

    TEST_CASE("zero prefix entries drop the direction") {
        // A direction never stepped into contributes nothing, so the value
        // coincides with the smaller graph that omits it.
        CHECK(b_closed_form(ParamVec({2, 3, 1}), {0, 2}) == b_closed_form(ParamVec({3, 1}), {2}));
        CHECK(b_closed_form(ParamVec({5, 2, 3}), {2, 0}) == b_closed_form(ParamVec({5, 3}), {2}));
    }

    TEST_CASE("prefix validation") {
        CHECK_THROWS_AS(b_closed_form(ParamVec({1, 1}), {1, 1}), DimensionMismatch);
        CHECK_THROWS_AS(b_closed_form(ParamVec({1, 1, 1}), {1, -1}), std::invalid_argument);
    }
}

TEST_SUITE("b_truncated_series") {
    TEST_CASE("two-dimensional all-ones case in closed form") {
        // With c = (1,1), prefix (1): value at truncation N is (2^(N+2)-N-3)/2^N.
        ParamVec c({1, 1});
        for (long long N : {0LL, 1LL, 5LL, 17LL}) {
            Rational expect(pow_integer(2, static_cast<unsigned>(N + 2)) - N - 3,
                            pow_integer(2, static_cast<unsigned>(N)));
            CHECK(b_truncated_series(c, {1}, N) == expect);
        }
        CHECK(b_truncated_series(c, {1}, 0) == 1);
    }

    TEST_CASE("monotone nondecreasing and bounded by the closed form") {
        ParamVec c({1, 2, 1});
        const Rational exact = b_closed_form(c, {1, 1});
        Rational prev(-1);
        for (long long N : {0LL, 2LL, 5LL, 10LL, 20LL, 40LL}) {
            Rational val = b_truncated_series(c, {1, 1}, N);
            CHECK(val >= prev);
            CHECK(val <= exact);
            prev = val;
        }
        CHECK(exact - prev < Rational(1, 1000));
    }

    TEST_CASE("converges for a mixed prefix with zero entries") {
        ParamVec c({2, 0, 3, 1});
        const Rational exact = b_closed_form(c, {1, 1, 1});
        Rational val = b_truncated_series(c, {1, 1, 1}, 120);
        CHECK(val <= exact);
        CHECK(exact - val < Rational(1, 100000));
    }

    TEST_CASE("empty prefix is exact immediately") {
        CHECK(b_truncated_series(ParamVec({1, 2, 1}), {0, 0}, 0) == 1);
    }

    TEST_CASE("guards") {
        ParamVec c({1, 1});
        CHECK_THROWS_AS(b_truncated_series(c, {9}, 10), BudgetExceeded);
        CHECK_THROWS_AS(b_truncated_series(c, {1}, -1), std::invalid_argument);
    }
}

TEST_SUITE("b_operator_exact") {
    TEST_CASE("agrees with the closed form on all-ones prefixes") {
        for (std::vector<long long> entries :
             {std::vector<long long>{1, 1}, {1, 1, 1}, {2, 3, 1}, {1, 2, 1}, {3, 0, 2, 5},
              {2, 0, 3, 1}, {1, 1, 1, 1, 2}}) {
            ParamVec c(entries);
            std::vector<long long> ones(static_cast<std::size_t>(c.n()), 1);
            CAPTURE(c.str());
            CHECK(b_operator_exact(c) == b_closed_form(c, ones));
        }
    }

    TEST_CASE("symbolic form evaluates to the same value") {
        const int n = 3;
        MultiPolyC sym = b_operator_exact_symbolic(n);
        CHECK(sym.arity() == n + 1);
        for (std::vector<long long> entries :
             {std::vector<long long>{1, 2, 3, 1}, {2, 0, 3, 4}, {1, 1, 1, 0}}) {
            ParamVec c(entries);
            std::vector<Rational> point{Rational(c[0]), Rational(c[1]), Rational(c[2]),
                                        Rational(c.last())};
            CAPTURE(c.str());
            CHECK(eval(sym, point) == b_operator_exact(c));
        }
    }
}

TEST_SUITE("limit_verify") {
    TEST_CASE("two-dimensional all-ones errors decay as (h+3)/2^h") {
        ParamVec c({1, 1});
        LimitReport report = limit_verify(c, {1}, 20, parse_rational("1e-3"));
        CHECK(report.reference == 4);
        CHECK(report.pass);
        REQUIRE(report.steps.size() == 20);
        for (const LimitStep& step : report.steps) {
            Rational expect(step.h + 3, pow_integer(2, static_cast<unsigned>(step.h)));
            CHECK(step.error == expect);
        }
        CHECK(report.final_decay == Rational(23, 44));
        CHECK(report.expected_decay == Rational(1, 2));
    }

    TEST_CASE("fails honestly when the height is too small") {
        ParamVec c({1, 1});
        LimitReport report = limit_verify(c, {1}, 4, parse_rational("1e-3"));
        CHECK_FALSE(report.pass);
        CHECK(report.steps.back().error == Rational(7, 16));
    }

    TEST_CASE("three-dimensional prefix against the closed form") {
        ParamVec c({1, 1, 1});
        LimitReport report = limit_verify(c, {1, 1}, 30, parse_rational("1e-2"));
        CHECK(report.reference == 54);
        CHECK(report.pass);
        CHECK(report.expected_decay == Rational(2, 3));
    }

    TEST_CASE("rejects a nonpositive tolerance") {
        CHECK_THROWS_AS(limit_verify(ParamVec({1, 1}), {1}, 5, Rational(0)), std::invalid_argument);
    }
}

TEST_SUITE("alpha_decomposition") {
    TEST_CASE("frozen coefficients") {
        std::vector<Rational> a2 = alpha_decomposition(2, 1);
        REQUIRE(a2.size() == 3);
        CHECK(a2[0] == 9);
        CHECK(a2[1] == Rational(27, 2));
        CHECK(a2[2] == Rational(9, 2));

        std::vector<Rational> a3 = alpha_decomposition(3, 1);
        REQUIRE(a3.size() == 4);
        CHECK(a3[0] == 64);
        CHECK(a3[1] == Rational(352, 3));
        CHECK(a3[2] == 64);
        CHECK(a3[3] == Rational(32, 3));
    }

    TEST_CASE("reassembles the all-ones growth constant") {
        for (std::vector<long long> entries :
             {std::vector<long long>{1, 2, 3, 1}, {1, 1, 1}, {2, 3, 0, 4}, {5, 2}}) {
            ParamVec c(entries);
            const int n = c.n();
            std::vector<Rational> alphas = alpha_decomposition(n, c.last());
            std::vector<Integer> head(c.entries().begin(), c.entries().end() - 1);
            Rational total = 0;
            for (int i = 0; i <= n; ++i) {
                total += Rational(factorial(static_cast<unsigned>(i)) *
                                  factorial(static_cast<unsigned>(n - i)) *
                                  sigma_elementary(head, i)) *
                         alphas[static_cast<std::size_t>(i)];
            }
            std::vector<long long> ones(static_cast<std::size_t>(n), 1);
            CAPTURE(c.str());
            CHECK(total == b_closed_form(c, ones));
        }
    }

    TEST_CASE("degenerate sizes") {
        std::vector<Rational> a0 = alpha_decomposition(0, 5);
        REQUIRE(a0.size() == 1);
        CHECK(a0[0] == 1);
        CHECK_THROWS_AS(alpha_decomposition(-1, 1), std::invalid_argument);
    }
}
