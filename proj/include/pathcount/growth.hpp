#pragma once

#include "pathcount/multipoly.hpp"
#include "pathcount/path_counts.hpp"
#include "pathcount/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace pathcount {

// Iterates the maps f: {1..m} -> {1..n} with |f^{-1}(j)| = prefix[j-1],
// m = sum(prefix), as distinct label sequences in lexicographic order.
class MapFamily {
public:
    explicit MapFamily(std::vector<long long> prefix);

    Integer size() const;  // multinomial m! / prod(prefix[j]!)
    long long steps() const { return m_; }

    // fn receives the label sequence (f(1), ..., f(m)), 1-based labels.
    void for_each(const std::function<void(const std::vector<int>&)>& fn) const;

private:
    std::vector<long long> prefix_;
    long long m_ = 0;
};

enum class BMethod { closed_form, truncated_series, operator_exact, ratio_limit };

struct BValue {
    Rational value;
    BMethod method;
    long long detail = -1;  // truncation N or height h when applicable

    bool operator==(const BValue&) const = default;
};

// Exact growth constant
//   B = ((c_last + m)^m / m!) * sum_{f} prod_{j=1..m} (c_{f(j)} + c_last + j - 1)
// with m = sum(prefix). prefix length must be params.n().
Rational b_closed_form(const ParamVec& params, const std::vector<long long>& prefix);

// Truncated double series: every step exponent j_k runs 0..trunc, ratios
// r_k = (c_last + k - 1)/(c_last + m). Monotone nondecreasing in trunc and
// converges to b_closed_form from below. The map enumeration is guarded by
// map_budget on m.
Rational b_truncated_series(const ParamVec& params, const std::vector<long long>& prefix,
                            long long trunc, long long map_budget = 8);

// Operator route for the all-ones prefix: evaluates the symmetrized operator
// expansion at (c_1..c_n) and q = c_last + n.
Rational b_operator_exact(const ParamVec& params);

// Symbolic version: polynomial in (c_1, ..., c_n, c_last).
MultiPolyC b_operator_exact_symbolic(int n);

struct LimitStep {
    int h;
    Rational ratio;
    Rational error;  // |ratio - b_closed_form|

    bool operator==(const LimitStep&) const = default;
};

struct LimitReport {
    std::vector<long long> c;
    std::vector<long long> prefix;
    Rational reference;  // b_closed_form
    std::vector<LimitStep> steps;
    Rational tolerance;
    bool pass = false;            // final error < tolerance
    Rational final_decay;         // error(h)/error(h-1) at the last step, 0 if exact
    Rational expected_decay;      // (c_last + m - 1)/(c_last + m)

    bool operator==(const LimitReport&) const = default;
};

LimitReport limit_verify(const ParamVec& params, const std::vector<long long>& prefix, int max_h,
                         const Rational& tolerance);

// Coefficients [alpha_0, ..., alpha_n] in x of
//   ((c_last + n)^n / n!) * prod_{k=1..n} (x + c_last + k - 1).
// Reassembly: sum_i i! (n-i)! sigma_i(c_1..c_n) alpha_i = B for the all-ones
// prefix.
std::vector<Rational> alpha_decomposition(int n, long long c_last);

}  // namespace pathcount
