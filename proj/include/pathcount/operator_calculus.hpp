#pragma once

#include "pathcount/multipoly.hpp"
#include "pathcount/rational.hpp"
#include "pathcount/unipoly.hpp"

#include <vector>

namespace pathcount {

// Calculus of the commuting operators D_b = u_b d/du_b acting on the product
// pi_n = prod_{b=1..n} 1/(1-u_b), with every u_b evaluated at (q-b)/q
// afterwards. Under that substitution 1/(1-u_b) = q/b, and
//   (u d/du)^k 1/(1-u) |_{u=(q-a)/q}
//     = a^(-k-1) sum_{i+j=k-1} A(i,j) q^(i+1) (q-a)^(j+1)
// with Eulerian numbers A(i,j); k = 0 gives q/a.

// Exponent vector (m_1, ..., m_n) of a product D_1^{m_1} ... D_n^{m_n}.
class DMonomial {
public:
    explicit DMonomial(std::vector<int> exponents);

    int arity() const { return static_cast<int>(exponents_.size()); }
    int operator[](int idx) const { return exponents_[static_cast<std::size_t>(idx)]; }
    const std::vector<int>& exponents() const { return exponents_; }

    bool operator==(const DMonomial&) const = default;
    auto operator<=>(const DMonomial&) const = default;

private:
    std::vector<int> exponents_;
};

// Closed form of (u d/du)^k 1/(1-u) at u = (q-a)/q, returned with the
// a^(-k-1) scalar folded into the coefficients. Requires k >= 0, a >= 1.
UniPoly dpow_geometric(int k, long long a);

// Applies D_1^{m_1} ... D_n^{m_n} to pi_n; factorizes across b.
UniPoly apply_dmonomial(const DMonomial& mono);

// Both sides of the symmetrized operator identity
//   sum_{sigma in S_n} prod_{a=1..n} (c_sigma(a) + D_a + ... + D_n) pi_n
//     = (q^n / n!) sum_{sigma in S_n} prod_{a=1..n} (c_sigma(a) + q - a),
// expanded as polynomials in c_1..c_n with q-polynomial coefficients.
CqPoly operator_product_sum(int n);  // left side
CqPoly closed_product_sum(int n);    // right side

// Sum over k-subsets {i_1 < ... < i_k} of {1..n} of
// (D_{i_1} + ... + D_n)...(D_{i_k} + ... + D_n) pi_n. Satisfies
//   n! * d_subset_sum(n, k) / q^n = Delta_{n+1, n-k+1}(q).
UniPoly d_subset_sum(int n, int k);

}  // namespace pathcount
