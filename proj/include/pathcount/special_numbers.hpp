#pragma once

#include "pathcount/rational.hpp"
#include "pathcount/unipoly.hpp"

#include <shared_mutex>
#include <vector>

namespace pathcount {

// Eulerian numbers A(i,j) in the two-index convention:
//   A(0,0) = 1,  A(i,j) = 0 when either index is negative,
//   A(i,j) = (i+1)*A(i,j-1) + (j+1)*A(i-1,j).
// A(i,j) counts permutations of i+j+1 elements with i descents, so each
// antidiagonal i+j = t sums to (t+1)!. Grows on demand; reads are
// concurrent, growth is exclusive.
class EulerianTable {
public:
    Integer at(int i, int j) const;

private:
    // diagonals_[t][i] = A(i, t-i)
    mutable std::vector<std::vector<Integer>> diagonals_;
    mutable std::shared_mutex mutex_;
    void grow(int t) const;
};

// Signed Stirling numbers of the first kind s1(n,k) (coefficients of the
// falling factorial: q(q-1)...(q-n+1) = sum_k s1(n,k) q^k) and Stirling
// numbers of the second kind s2(k,m) (set partition counts). Both are zero
// outside 1 <= k <= n resp. 1 <= m <= k.
class StirlingTables {
public:
    Integer first(int n, int k) const;
    Integer second(int k, int m) const;

private:
    mutable std::vector<std::vector<Integer>> s1_rows_, s2_rows_;  // row n holds k=1..n
    mutable std::shared_mutex mutex_;
    void grow(int n) const;
};

EulerianTable& eulerian_table();
StirlingTables& stirling_tables();

Integer eulerian(int i, int j);
Integer stirling1(int n, int k);
Integer stirling2(int k, int m);

// C(a,b) with C(a,b) = 0 whenever b < 0 or b > a (so any negative a gives 0
// for b >= 0, and the b < 0 case is 0 regardless).
Integer binomial(long long a, long long b);

// q(q-1)...(q-n+1); n = 0 gives 1. Built by direct multiplication so it can
// cross-check the Stirling recurrence.
UniPoly falling_factorial(int n);

// Elementary symmetric polynomial sigma_i evaluated at the entries of c.
// sigma_0 = 1; i > len(c) gives 0; i < 0 is invalid.
Integer sigma_elementary(const std::vector<Integer>& c, int i);

}  // namespace pathcount
