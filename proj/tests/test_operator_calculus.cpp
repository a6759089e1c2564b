#include "pathcount/gamma_delta.hpp"
#include "pathcount/operator_calculus.hpp"
#include "pathcount/special_numbers.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace pathcount;

namespace {

// Numerical check of dpow_geometric: (u d/du)^k 1/(1-u) = sum_j j^k u^j,
// summed directly at u = (q-a)/q for a rational q > a (so |u| < 1).
double dpow_by_series(int k, long long a, double qval) {
    const double u = (qval - static_cast<double>(a)) / qval;
    double sum = (k == 0) ? 1.0 : 0.0;  // j = 0 term
    for (int j = 1; j <= 400; ++j) sum += std::pow(j, k) * std::pow(u, j);
    return sum;
}

}  // namespace

TEST_SUITE("dpow_geometric") {
    TEST_CASE("k = 0 collapses to q/a") {
        for (long long a = 1; a <= 6; ++a)
            CHECK(dpow_geometric(0, a) == UniPoly::variable() * Rational(1, a));
    }

    TEST_CASE("hand-expanded k = 1, 2") {
        // a^{-2} q (q-a):  a = 2 -> q(q-2)/4
        CHECK(dpow_geometric(1, 2) ==
              UniPoly(std::vector<Rational>{0, Rational(-1, 2), Rational(1, 4)}));
        // a^{-3} [q(q-a)^2 + q^2(q-a)]:  a = 2 -> (q^3 - 3q^2/2 + ... )
        CHECK(dpow_geometric(2, 2) ==
              UniPoly(std::vector<Rational>{0, Rational(1, 2), Rational(-3, 4), Rational(1, 4)}));
    }

    TEST_CASE("matches the summed series numerically") {
        for (int k = 0; k <= 6; ++k)
            for (long long a = 1; a <= 4; ++a) {
                const double qval = 2.0 * static_cast<double>(a) + 1.0;
                UniPoly p = dpow_geometric(k, a);
                double exact = static_cast<double>(p(Rational(2 * a + 1)).convert_to<double>());
                double series = dpow_by_series(k, a, qval);
                CAPTURE(k);
                CAPTURE(a);
                CHECK(std::abs(exact - series) < 1e-6 * std::max(1.0, std::abs(series)));
            }
    }

    TEST_CASE("rejects bad arguments") {
        CHECK_THROWS_AS(dpow_geometric(-1, 2), std::invalid_argument);
        CHECK_THROWS_AS(dpow_geometric(2, 0), std::invalid_argument);
    }
}

TEST_SUITE("apply_dmonomial") {
    TEST_CASE("identity monomial gives pi_n = q^n / n!") {
        for (int n = 1; n <= 5; ++n) {
            DMonomial mono(std::vector<int>(static_cast<std::size_t>(n), 0));
            CHECK(apply_dmonomial(mono) ==
                  UniPoly::variable().pow(static_cast<unsigned>(n)) *
                      Rational(1, factorial(static_cast<unsigned>(n))));
        }
    }

    TEST_CASE("hand-expanded two-variable cases") {
        UniPoly q = UniPoly::variable();
        // D_1 pi_2 = (q(q-1)) * (q/2) / q = q^2(q-1)/2 / q ... expanded: (q^3-q^2)/2
        CHECK(apply_dmonomial(DMonomial({1, 0})) ==
              (q.pow(3) - q.pow(2)) * Rational(1, 2));
        // D_1 D_2 pi_2 = q^2 (q-1)(q-2) / 4
        CHECK(apply_dmonomial(DMonomial({1, 1})) ==
              q.pow(2) * UniPoly(std::vector<Rational>{-1, 1}) *
                  UniPoly(std::vector<Rational>{-2, 1}) * Rational(1, 4));
        // 2 D_2 pi_2 + D_1 pi_2 = (q^2/2)(2q - 3)
        CHECK(apply_dmonomial(DMonomial({0, 1})) * Rational(2) +
                  apply_dmonomial(DMonomial({1, 0})) ==
              q.pow(2) * UniPoly(std::vector<Rational>{-3, 2}) * Rational(1, 2));
    }

    TEST_CASE("factors multiply independently") {
        UniPoly combined = apply_dmonomial(DMonomial({2, 1, 0}));
        UniPoly product = dpow_geometric(2, 1) * dpow_geometric(1, 2) * dpow_geometric(0, 3);
        CHECK(combined == product);
    }
}

TEST_SUITE("symmetrized_identity") {
    TEST_CASE("n = 1 expansion") {
        CqPoly lhs = operator_product_sum(1);
        UniPoly q = UniPoly::variable();
        CHECK(lhs.coefficient({1}) == q);
        CHECK(lhs.coefficient({0}) == q.pow(2) - q);
        CHECK(lhs == closed_product_sum(1));
    }

    TEST_CASE("n = 2 coefficient spot checks") {
        CqPoly lhs = operator_product_sum(2);
        UniPoly q = UniPoly::variable();
        CHECK(lhs.coefficient({1, 1}) == q.pow(2));
        CHECK(lhs == closed_product_sum(2));
    }

    TEST_CASE("sides agree through n = 5") {
        for (int n = 1; n <= 5; ++n) {
            CAPTURE(n);
            CHECK(operator_product_sum(n) == closed_product_sum(n));
        }
    }

    TEST_CASE("closed side matches direct evaluation at sample points") {
        // Substituting numbers for c_1..c_n must reproduce
        // (q^n/n!) sum_sigma prod_a (c_sigma(a) + q - a).
        const int n = 3;
        CqPoly rhs = closed_product_sum(n);
        std::vector<Rational> cvals{2, 5, 7};
        UniPoly got = eval_c(rhs, cvals);
        UniPoly expect;
        std::vector<int> perm{0, 1, 2};
        UniPoly q = UniPoly::variable();
        do {
            UniPoly prod(Rational(1));
            for (int a = 1; a <= n; ++a)
                prod *= q + UniPoly(cvals[static_cast<std::size_t>(perm[static_cast<std::size_t>(a - 1)])] -
                                    Rational(a));
            expect += prod;
        } while (std::next_permutation(perm.begin(), perm.end()));
        expect *= Rational(1, factorial(n));
        expect = expect * q.pow(n);
        CHECK(got == expect);
    }

    TEST_CASE("guard on the expansion size") {
        CHECK_THROWS_AS(operator_product_sum(9), std::invalid_argument);
        CHECK_THROWS_AS(operator_product_sum(0), std::invalid_argument);
    }
}

TEST_SUITE("d_subset_sum") {
    TEST_CASE("k = 0 reduces to pi_n") {
        for (int n = 1; n <= 5; ++n)
            CHECK(d_subset_sum(n, 0) ==
                  UniPoly::variable().pow(static_cast<unsigned>(n)) *
                      Rational(1, factorial(static_cast<unsigned>(n))));
    }

    TEST_CASE("hand-expanded n = 2, k = 1") {
        // (D_1 + D_2) pi_2 + D_2 pi_2 = q^3 - (3/2) q^2
        UniPoly q = UniPoly::variable();
        CHECK(d_subset_sum(2, 1) == q.pow(3) - q.pow(2) * Rational(3, 2));
    }

    TEST_CASE("bridges to the subset-product polynomials") {
        for (int n = 1; n <= 6; ++n)
            for (int k = 0; k <= n; ++k) {
                UniPoly lhs = d_subset_sum(n, k) * Rational(factorial(static_cast<unsigned>(n)));
                UniPoly rhs = delta_poly(n + 1, n - k + 1).poly *
                              UniPoly::variable().pow(static_cast<unsigned>(n));
                CAPTURE(n);
                CAPTURE(k);
                CHECK(lhs == rhs);
            }
    }

    TEST_CASE("rejects out-of-range subsets") {
        CHECK_THROWS_AS(d_subset_sum(3, 4), std::invalid_argument);
        CHECK_THROWS_AS(d_subset_sum(3, -1), std::invalid_argument);
    }
}
