#pragma once

#include "pathcount/rational.hpp"
#include "pathcount/unipoly.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pathcount {

// Polynomial providers for the verifiers. Tests substitute perturbed
// versions to confirm the suite actually detects broken inputs; the
// defaults are the production routes.
struct PolySource {
    std::function<UniPoly(int k, long long n)> gamma;  // Gamma_k(q, n)
    std::function<UniPoly(int n, int k)> delta;        // Delta_{n,k}(q)

    UniPoly get_gamma(int k, long long n) const;
    UniPoly get_delta(int n, int k) const;
};

struct Counterexample {
    std::map<std::string, long long> where;  // offending parameter values
    std::string lhs;
    std::string rhs;

    bool operator==(const Counterexample&) const = default;
};

struct IdentityReport {
    std::string identity;
    std::map<std::string, long long> range;
    bool pass = false;
    std::optional<Counterexample> counterexample;
    std::vector<std::string> notes;
    long long elapsed_ms = 0;

    bool operator==(const IdentityReport&) const = default;
};

// Column recurrence of the Delta triangle against Gamma polynomials:
//   Delta_{n,k} = sum_{m=0}^{n-k} C(k+m, 1+m) Gamma_{1+m}(q,n) Delta_{n,k+m} / n^(1+m)
// checked for all 1 <= k <= n, n = 1..max_n.
IdentityReport verify_colyrel(int max_n, const PolySource& src = {});

// Variant with the 1/(n-k) prefactor:
//   Delta_{n,k} = (1/(n-k)) sum_{m=1}^{n-k} C(m+k, m+1) n^(-m) Gamma_{m+1}(q,n) Delta_{n,k+m}
// checked for 1 <= k <= n-1, n = 2..max_n; k = n is skipped with a note.
IdentityReport verify_stirling_form(int max_n, const PolySource& src = {});

// Coefficient-level identity relating both kinds of Stirling numbers:
//   C(r+n-k-1, r) s1(n, r+n-k)
//     = sum_{m=0}^{k} C(m+n-k, m+1) sum_{i=0}^{r} C(i+n-k+m-1, i)
//       (-1)^(m+r-i) n^(i-r-1) (r-i+1)! s2(m+1, r-i+1) s1(n, i+n-k+m)
// for 1 <= k <= n, 0 <= r <= k, n = 1..max_n. The alternate upper bound
// m <= n-k is evaluated alongside and any disagreement is noted.
IdentityReport verify_coefs(int max_n);

// Row identity of signed Stirling numbers of the first kind:
//   s1(n, n-k) = (1/k) sum_{m=1}^{k} C(m+n-k, m+1) (-1)^m s1(n, n-k+m)
// for 1 <= k <= n, n = 1..max_n.
IdentityReport verify_star(int max_n);

// Closed forms of the first two subdiagonals:
//   s1(n, n-1) = -C(n, 2)            for n >= 2
//   s1(n, n-2) = n(n-1)(n-2)(3n-1)/24 for n >= 3
IdentityReport verify_known_s1(int max_n);

// Gamma through Stirling numbers equals Gamma through Eulerian numbers,
// k = 1..max_k, n = 1..max_n.
IdentityReport verify_frobenius(int max_k, int max_n, const PolySource& src = {});

// Eulerian closed form of (u d/du)^k 1/(1-u) at u=(q-a)/q against the
// rational-function route (repeated u*d/du, then substitution),
// k = 0..max_k, a = 1..max_a.
IdentityReport verify_thm1(int max_k, int max_a);

// Symmetrized operator identity: expansion of
// sum_sigma prod_a (c_sigma(a) + D_a + ... + D_n) pi_n equals
// (q^n/n!) sum_sigma prod_a (c_sigma(a) + q - a), n = 1..max_n.
// Also checks n! * d_subset_sum(n,k) / q^n = Delta_{n+1,n-k+1}.
IdentityReport verify_new_n(int max_n, const PolySource& src = {});

struct VerifyCeilings {
    int colyrel_max_n = 10;
    int stirling_form_max_n = 10;
    int coefs_max_n = 10;
    int star_max_n = 30;
    int known_s1_max_n = 30;
    int frobenius_max_k = 12;
    int frobenius_max_n = 12;
    int thm1_max_k = 10;
    int thm1_max_a = 6;
    int new_n_max_n = 5;
};

std::vector<IdentityReport> verify_all(const VerifyCeilings& ceilings = {});

}  // namespace pathcount
