#pragma once

#include "pathcount/rational.hpp"
#include "pathcount/unipoly.hpp"

#include <utility>

namespace pathcount {

// Rational function of the shape N(u) / (1-u)^d. This family is closed
// under the operator u*d/du, which is all the operator calculus needs.
// Canonical form: either the numerator is not divisible by (1-u), or d == 0;
// the zero function is stored as numerator 0 with d == 0.
class RationalFn {
public:
    RationalFn() = default;  // zero
    RationalFn(UniPoly numerator, int pole_order);

    static RationalFn geometric() { return RationalFn(UniPoly(Rational(1)), 1); }  // 1/(1-u)

    const UniPoly& numerator() const { return numerator_; }
    int pole_order() const { return pole_order_; }
    bool is_zero() const { return numerator_.is_zero(); }

    // Applies u * d/du: N/(1-u)^d -> u*(N'(1-u) + d*N) / (1-u)^(d+1),
    // recanonicalized.
    RationalFn mul_u_ddu() const;

    bool operator==(const RationalFn&) const = default;

    std::string str() const;

private:
    UniPoly numerator_;
    int pole_order_ = 0;
};

// Substitutes u = (q-a)/q, so 1-u = a/q. The result is scalar * poly(q) with
// scalar = a^(-d):
//   N(u)/(1-u)^d  ->  a^(-d) * q^(d-deg N) * sum_t n_t (q-a)^t q^(deg N - t).
// Requires d >= deg N (throws std::domain_error otherwise) and a >= 1
// (throws std::invalid_argument for a <= 0; a == 0 is a pole of u).
std::pair<UniPoly, Rational> substitute_u(const RationalFn& f, long long a);

}  // namespace pathcount
