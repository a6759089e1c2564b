#pragma once

#include "pathcount/rational.hpp"
#include "pathcount/unipoly.hpp"

namespace pathcount {

// Gamma_k(q, n): degree k-1 in q, integer coefficients, leading coefficient
// k!. Defined through Stirling numbers of the second kind:
//   Gamma_k(q, n) = sum_{i=1}^{k} (-1)^(k-i) s2(k,i) i! q^(i-1) n^(k-i).
struct GammaPoly {
    int k;
    long long n;
    UniPoly poly;
};

// Delta_{n,k}(q): degree n-k, integer coefficients, Delta_{n,n} = 1.
// Equals the sum over (n-k)-subsets {i_1 < ... < i_{n-k}} of {1..n-1} of
// prod_t (q - i_t).
struct DeltaPoly {
    int n;
    int k;
    UniPoly poly;
};

// Requires k >= 1, n >= 1.
GammaPoly gamma_poly(int k, long long n);

// Same polynomial through the Eulerian-number route:
//   Gamma_k(q, n) = sum_{i+j=k-1} A(i,j) q^i (q-n)^j.
UniPoly gamma_via_frobenius(int k, long long n);

// Production route via Stirling numbers of the first kind:
//   Delta_{n,k}(q) = sum_{m=0}^{n-k} C(k-1+m, m) s1(n, k+m) q^m.
// Requires 1 <= k <= n.
DeltaPoly delta_poly(int n, int k);

// Independent route: explicit subset-product expansion. The number of
// subsets is C(n-1, n-k); the budget guards n.
UniPoly delta_poly_bruteforce(int n, int k, long long budget = 16);

}  // namespace pathcount
