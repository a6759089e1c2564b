#include "pathcount/rational_fn.hpp"

#include <sstream>
#include <stdexcept>

namespace pathcount {

RationalFn::RationalFn(UniPoly numerator, int pole_order)
    : numerator_(std::move(numerator)), pole_order_(pole_order) {
    if (pole_order_ < 0) throw std::invalid_argument("pole order must be nonnegative");
    if (numerator_.is_zero()) {
        pole_order_ = 0;
        return;
    }
    // Cancel common (1-u) factors: N = (1-u)*Q  <=>  Q = -(N / (u-1)).
    while (pole_order_ > 0 && numerator_(1) == 0) {
        numerator_ = -numerator_.divided_by_linear(1);
        --pole_order_;
    }
}

RationalFn RationalFn::mul_u_ddu() const {
    if (is_zero()) return RationalFn();
    // d/du [N/(1-u)^d] = [N'(1-u) + d*N] / (1-u)^(d+1)
    UniPoly one_minus_u(std::vector<Rational>{1, -1});
    UniPoly top = numerator_.derivative() * one_minus_u + numerator_ * Rational(pole_order_);
    top *= UniPoly::variable();
    return RationalFn(std::move(top), pole_order_ + 1);
}

std::string RationalFn::str() const {
    std::ostringstream os;
    os << "(" << numerator_.str("u") << ")";
    if (pole_order_ > 0) os << "/(1-u)^" << pole_order_;
    return os.str();
}

std::pair<UniPoly, Rational> substitute_u(const RationalFn& f, long long a) {
    if (a <= 0) throw std::invalid_argument("substitution u=(q-a)/q needs a >= 1");
    if (f.is_zero()) return {UniPoly(), Rational(1)};
    const int deg = f.numerator().degree();
    const int d = f.pole_order();
    if (d < deg) {
        throw std::domain_error("pole order below numerator degree; substitution would not be polynomial");
    }
    UniPoly q = UniPoly::variable();
    UniPoly q_minus_a(std::vector<Rational>{Rational(-a), 1});
    UniPoly sum;
    for (int t = 0; t <= deg; ++t) {
        Rational nt = f.numerator().coeff(t);
        if (nt == 0) continue;
        sum += nt * q_minus_a.pow(static_cast<unsigned>(t)) * q.pow(static_cast<unsigned>(deg - t));
    }
    UniPoly poly = q.pow(static_cast<unsigned>(d - deg)) * sum;
    Rational scalar(1, pow_integer(Integer(a), static_cast<unsigned>(d)));
    return {std::move(poly), std::move(scalar)};
}

}  // namespace pathcount
