#include "pathcount/operator_calculus.hpp"

#include "pathcount/special_numbers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace pathcount {

DMonomial::DMonomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
    if (exponents_.empty()) throw std::invalid_argument("operator monomial needs arity >= 1");
    for (int e : exponents_) {
        if (e < 0) throw std::invalid_argument("operator exponents must be nonnegative");
    }
}

UniPoly dpow_geometric(int k, long long a) {
    if (k < 0) throw std::invalid_argument("dpow_geometric needs k >= 0");
    if (a < 1) throw std::invalid_argument("dpow_geometric needs a >= 1");
    UniPoly q = UniPoly::variable();
    if (k == 0) return q * Rational(1, a);
    UniPoly q_minus_a(std::vector<Rational>{Rational(-a), 1});
    UniPoly acc;
    for (int i = 0; i <= k - 1; ++i) {
        const int j = k - 1 - i;
        Rational coeff(eulerian(i, j));
        if (coeff == 0) continue;
        acc += coeff * q.pow(static_cast<unsigned>(i + 1)) * q_minus_a.pow(static_cast<unsigned>(j + 1));
    }
    acc *= Rational(1, pow_integer(Integer(a), static_cast<unsigned>(k + 1)));
    return acc;
}

UniPoly apply_dmonomial(const DMonomial& mono) {
    UniPoly acc(Rational(1));
    for (int b = 1; b <= mono.arity(); ++b) {
        acc *= dpow_geometric(mono[b - 1], b);
    }
    return acc;
}

namespace {

// Expansion key for sum_sigma prod_a (c_sigma(a) + D_a + ... + D_n): which
// c's were chosen (bitmask over sigma values) and the D exponent vector.
using ExpansionKey = std::pair<unsigned, std::vector<int>>;

void for_each_permutation(int n, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        fn(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
}

std::vector<int> mask_to_exponents(unsigned mask, int n) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) e[static_cast<std::size_t>(i)] = 1;
    }
    return e;
}

}  // namespace

CqPoly operator_product_sum(int n) {
    if (n < 1) throw std::invalid_argument("operator_product_sum needs n >= 1");
    if (n > 8) throw std::invalid_argument("operator_product_sum supports n <= 8");

    std::map<ExpansionKey, Integer> expansion;
    for_each_permutation(n, [&](const std::vector<int>& sigma) {
        std::map<ExpansionKey, Integer> cur;
        cur[{0u, std::vector<int>(static_cast<std::size_t>(n), 0)}] = 1;
        for (int a = 1; a <= n; ++a) {
            std::map<ExpansionKey, Integer> next;
            const unsigned cbit = 1u << (sigma[static_cast<std::size_t>(a - 1)] - 1);
            for (const auto& [key, coeff] : cur) {
                // choose the c factor
                next[{key.first | cbit, key.second}] += coeff;
                // or one of D_a .. D_n
                for (int b = a; b <= n; ++b) {
                    ExpansionKey nk = key;
                    ++nk.second[static_cast<std::size_t>(b - 1)];
                    next[std::move(nk)] += coeff;
                }
            }
            cur = std::move(next);
        }
        for (auto& [key, coeff] : cur) expansion[key] += coeff;
    });

    std::map<std::vector<int>, UniPoly> applied;  // cache per D exponent vector
    CqPoly out(n);
    for (const auto& [key, coeff] : expansion) {
        auto it = applied.find(key.second);
        if (it == applied.end()) {
            it = applied.emplace(key.second, apply_dmonomial(DMonomial(key.second))).first;
        }
        out.add_term(mask_to_exponents(key.first, n), it->second * Rational(coeff));
    }
    return out;
}

CqPoly closed_product_sum(int n) {
    if (n < 1) throw std::invalid_argument("closed_product_sum needs n >= 1");
    if (n > 8) throw std::invalid_argument("closed_product_sum supports n <= 8");

    std::map<unsigned, UniPoly> expansion;  // c choice mask -> q polynomial
    for_each_permutation(n, [&](const std::vector<int>& sigma) {
        std::map<unsigned, UniPoly> cur;
        cur[0u] = UniPoly(Rational(1));
        for (int a = 1; a <= n; ++a) {
            std::map<unsigned, UniPoly> next;
            const unsigned cbit = 1u << (sigma[static_cast<std::size_t>(a - 1)] - 1);
            UniPoly q_minus_a(std::vector<Rational>{Rational(-a), 1});
            for (const auto& [mask, poly] : cur) {
                next[mask | cbit] += poly;
                next[mask] += poly * q_minus_a;
            }
            cur = std::move(next);
        }
        for (auto& [mask, poly] : cur) expansion[mask] += poly;
    });

    const Rational scale(Integer(1), factorial(static_cast<unsigned>(n)));
    const UniPoly qn = UniPoly::variable().pow(static_cast<unsigned>(n));
    CqPoly out(n);
    for (const auto& [mask, poly] : expansion) {
        out.add_term(mask_to_exponents(mask, n), qn * poly * scale);
    }
    return out;
}

UniPoly d_subset_sum(int n, int k) {
    if (n < 1) throw std::invalid_argument("d_subset_sum needs n >= 1");
    if (k < 0 || k > n) throw std::invalid_argument("d_subset_sum needs 0 <= k <= n");

    std::map<std::vector<int>, Integer> expansion;
    std::vector<int> subset(static_cast<std::size_t>(k));
    auto emit_subset = [&](auto&& self, int next_i, int depth) -> void {
        if (depth == k) {
            // expand (D_{subset[0]} + ... + D_n) ... (D_{subset[k-1]} + ... + D_n)
            std::map<std::vector<int>, Integer> cur;
            cur[std::vector<int>(static_cast<std::size_t>(n), 0)] = 1;
            for (int t = 0; t < k; ++t) {
                std::map<std::vector<int>, Integer> next;
                for (const auto& [e, coeff] : cur) {
                    for (int b = subset[static_cast<std::size_t>(t)]; b <= n; ++b) {
                        std::vector<int> ne = e;
                        ++ne[static_cast<std::size_t>(b - 1)];
                        next[std::move(ne)] += coeff;
                    }
                }
                cur = std::move(next);
            }
            for (auto& [e, coeff] : cur) expansion[e] += coeff;
            return;
        }
        for (int i = next_i; i <= n; ++i) {
            subset[static_cast<std::size_t>(depth)] = i;
            self(self, i + 1, depth + 1);
        }
    };
    emit_subset(emit_subset, 1, 0);

    UniPoly acc;
    for (const auto& [e, coeff] : expansion) {
        acc += apply_dmonomial(DMonomial(e)) * Rational(coeff);
    }
    return acc;
}

}  // namespace pathcount
