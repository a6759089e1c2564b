#include "pathcount/special_numbers.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

using namespace pathcount;

namespace {

// Permutations of i+j+1 elements with exactly i descents.
Integer eulerian_by_descents(int i, int j) {
    const int m = i + j + 1;
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    Integer count = 0;
    do {
        int descents = 0;
        for (int t = 0; t + 1 < m; ++t)
            if (perm[static_cast<std::size_t>(t)] > perm[static_cast<std::size_t>(t + 1)]) ++descents;
        if (descents == i) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// Set partitions of {1..k} into exactly m blocks, counted via restricted
// growth strings.
Integer partitions_by_rgs(int k, int m) {
    Integer count = 0;
    std::vector<int> rgs(static_cast<std::size_t>(k), 0);
    while (true) {
        int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        if (blocks == m) ++count;
        int pos = k - 1;
        for (; pos > 0; --pos) {
            int cap = *std::max_element(rgs.begin(), rgs.begin() + pos) + 1;
            if (rgs[static_cast<std::size_t>(pos)] < cap) break;
            rgs[static_cast<std::size_t>(pos)] = 0;
        }
        if (pos == 0) break;
        ++rgs[static_cast<std::size_t>(pos)];
    }
    return count;
}

// s1(n,k) = (-1)^(n-k) e_{n-k}(1, 2, ..., n-1), by direct subset sums.
Integer stirling1_by_subsets(int n, int k) {
    const int picks = n - k;
    if (picks < 0 || k < 1) return 0;
    Integer total = 0;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        if (std::popcount(mask) != picks) continue;
        Integer prod = 1;
        for (int b = 0; b < n - 1; ++b)
            if (mask & (1u << b)) prod *= b + 1;
        total += prod;
    }
    return (picks % 2 == 0) ? total : -total;
}

}  // namespace

TEST_SUITE("eulerian") {
    TEST_CASE("matches descent counting through i+j = 7") {
        for (int i = 0; i <= 7; ++i)
            for (int j = 0; i + j <= 7; ++j) {
                CAPTURE(i);
                CAPTURE(j);
                CHECK(eulerian(i, j) == eulerian_by_descents(i, j));
            }
    }

    TEST_CASE("known entries") {
        CHECK(eulerian(0, 0) == 1);
        CHECK(eulerian(1, 1) == 4);
        CHECK(eulerian(1, 2) == 11);
        CHECK(eulerian(2, 1) == 11);
        CHECK(eulerian(2, 2) == 66);
        CHECK(eulerian(0, 9) == 1);
        CHECK(eulerian(-1, 3) == 0);
        CHECK(eulerian(3, -1) == 0);
    }

    TEST_CASE("antidiagonals sum to factorials and are symmetric") {
        for (int t = 0; t <= 12; ++t) {
            Integer sum = 0;
            for (int i = 0; i <= t; ++i) {
                sum += eulerian(i, t - i);
                CHECK(eulerian(i, t - i) == eulerian(t - i, i));
            }
            CHECK(sum == factorial(static_cast<unsigned>(t + 1)));
        }
    }
}

TEST_SUITE("stirling") {
    TEST_CASE("second kind matches partition counting through k = 8") {
        for (int k = 1; k <= 8; ++k)
            for (int m = 1; m <= k; ++m) {
                CAPTURE(k);
                CAPTURE(m);
                CHECK(stirling2(k, m) == partitions_by_rgs(k, m));
            }
    }

    TEST_CASE("first kind matches signed subset sums through n = 9") {
        for (int n = 1; n <= 9; ++n)
            for (int k = 1; k <= n; ++k) {
                CAPTURE(n);
                CAPTURE(k);
                CHECK(stirling1(n, k) == stirling1_by_subsets(n, k));
            }
    }

    TEST_CASE("known entries and out-of-range zeros") {
        CHECK(stirling2(3, 2) == 3);
        CHECK(stirling2(5, 2) == 15);
        CHECK(stirling2(6, 3) == 90);
        CHECK(stirling1(5, 3) == 35);
        CHECK(stirling1(5, 4) == -10);
        CHECK(stirling1(4, 1) == -6);
        CHECK(stirling2(4, 5) == 0);
        CHECK(stirling2(4, 0) == 0);
        CHECK(stirling1(3, 4) == 0);
        CHECK(stirling1(0, 0) == 0);
        CHECK(stirling1(-2, 1) == 0);
    }

    TEST_CASE("the two kinds are inverse triangles") {
        for (int n = 1; n <= 12; ++n)
            for (int m = 1; m <= 12; ++m) {
                Integer sum = 0;
                for (int j = 1; j <= n; ++j) sum += stirling1(n, j) * stirling2(j, m);
                CHECK(sum == (n == m ? 1 : 0));
            }
    }
}

TEST_SUITE("falling_factorial") {
    TEST_CASE("small cases") {
        CHECK(falling_factorial(0) == UniPoly(Rational(1)));
        CHECK(falling_factorial(1) == UniPoly::variable());
        CHECK(falling_factorial(4) == UniPoly(std::vector<Rational>{0, -6, 11, -6, 1}));
        CHECK(falling_factorial(5) == UniPoly(std::vector<Rational>{0, 24, -50, 35, -10, 1}));
    }

    TEST_CASE("coefficients agree with the first-kind recurrence") {
        for (int n = 1; n <= 15; ++n) {
            UniPoly ff = falling_factorial(n);
            CHECK(ff.degree() == n);
            CHECK(ff.coeff(0) == 0);
            for (int k = 1; k <= n; ++k) CHECK(ff.coeff(k) == Rational(stirling1(n, k)));
        }
    }

    TEST_CASE("evaluates to factorials and to zero on its roots") {
        CHECK(falling_factorial(6)(Rational(6)) == 720);
        CHECK(falling_factorial(6)(Rational(3)) == 0);
        CHECK(falling_factorial(6)(Rational(-1)) == 720);
    }
}

TEST_SUITE("binomial") {
    TEST_CASE("edges and Pascal rule") {
        CHECK(binomial(0, 0) == 1);
        CHECK(binomial(5, -1) == 0);
        CHECK(binomial(5, 6) == 0);
        CHECK(binomial(-1, 0) == 0);
        CHECK(binomial(40, 20) == Integer("137846528820"));
        for (int a = 1; a <= 20; ++a)
            for (int b = 0; b <= a; ++b)
                CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
    }
}

TEST_SUITE("sigma_elementary") {
    TEST_CASE("hand-expanded values") {
        std::vector<Integer> c{2, 3, 5};
        CHECK(sigma_elementary(c, 0) == 1);
        CHECK(sigma_elementary(c, 1) == 10);
        CHECK(sigma_elementary(c, 2) == 31);
        CHECK(sigma_elementary(c, 3) == 30);
        CHECK(sigma_elementary(c, 4) == 0);
        CHECK_THROWS_AS(sigma_elementary(c, -1), std::invalid_argument);
    }

    TEST_CASE("generates the coefficients of prod (q + c_j)") {
        std::vector<Integer> c{1, 4, 0, 7, 2};
        UniPoly prod(Rational(1));
        for (const Integer& cj : c)
            prod *= UniPoly(std::vector<Rational>{Rational(cj), 1});
        for (int i = 0; i <= 5; ++i)
            CHECK(prod.coeff(5 - i) == Rational(sigma_elementary(c, i)));
    }
}
