#include "pathcount/gamma_delta.hpp"

#include "pathcount/errors.hpp"
#include "pathcount/special_numbers.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace pathcount {

GammaPoly gamma_poly(int k, long long n) {
    if (k < 1) throw std::invalid_argument("gamma_poly needs k >= 1");
    if (n < 1) throw std::invalid_argument("gamma_poly needs n >= 1");
    std::vector<Rational> coeffs(static_cast<std::size_t>(k), Rational(0));
    for (int i = 1; i <= k; ++i) {
        Integer term = stirling2(k, i) * factorial(static_cast<unsigned>(i)) *
                       pow_integer(Integer(n), static_cast<unsigned>(k - i));
        if ((k - i) % 2 != 0) term = -term;
        coeffs[static_cast<std::size_t>(i - 1)] = Rational(term);
    }
    GammaPoly out{k, n, UniPoly(std::move(coeffs))};
    if (out.poly.degree() != k - 1 || !out.poly.has_integer_coeffs() ||
        out.poly.coeff(k - 1) != Rational(factorial(static_cast<unsigned>(k)))) {
        throw std::logic_error("gamma polynomial shape invariant violated");
    }
    return out;
}

UniPoly gamma_via_frobenius(int k, long long n) {
    if (k < 1) throw std::invalid_argument("gamma_via_frobenius needs k >= 1");
    if (n < 1) throw std::invalid_argument("gamma_via_frobenius needs n >= 1");
    UniPoly q = UniPoly::variable();
    UniPoly q_minus_n(std::vector<Rational>{Rational(-n), 1});
    UniPoly acc;
    for (int i = 0; i <= k - 1; ++i) {
        const int j = k - 1 - i;
        Rational a(eulerian(i, j));
        if (a == 0) continue;
        acc += a * q.pow(static_cast<unsigned>(i)) * q_minus_n.pow(static_cast<unsigned>(j));
    }
    return acc;
}

DeltaPoly delta_poly(int n, int k) {
    if (k < 1 || k > n) {
        throw std::invalid_argument("delta_poly needs 1 <= k <= n, got n=" + std::to_string(n) +
                                    " k=" + std::to_string(k));
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(n - k) + 1, Rational(0));
    for (int m = 0; m <= n - k; ++m) {
        coeffs[static_cast<std::size_t>(m)] = Rational(binomial(k - 1 + m, m) * stirling1(n, k + m));
    }
    DeltaPoly out{n, k, UniPoly(std::move(coeffs))};
    if (out.poly.degree() != n - k || !out.poly.has_integer_coeffs()) {
        throw std::logic_error("delta polynomial shape invariant violated");
    }
    return out;
}

UniPoly delta_poly_bruteforce(int n, int k, long long budget) {
    if (k < 1 || k > n) {
        throw std::invalid_argument("delta_poly_bruteforce needs 1 <= k <= n");
    }
    if (n > budget) {
        throw BudgetExceeded("n = " + std::to_string(n) + " exceeds subset enumeration budget " +
                             std::to_string(budget));
    }
    const int pick = n - k;  // subset size, from {1..n-1}
    UniPoly acc;
    std::vector<int> subset(static_cast<std::size_t>(pick));
    auto rec = [&](auto&& self, int next, int depth) -> void {
        if (depth == pick) {
            UniPoly prod(Rational(1));
            for (int t : subset) prod *= UniPoly(std::vector<Rational>{Rational(-t), 1});
            acc += prod;
            return;
        }
        for (int i = next; i <= n - 1; ++i) {
            subset[static_cast<std::size_t>(depth)] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 1, 0);
    return acc;
}

}  // namespace pathcount
