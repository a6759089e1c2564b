#pragma once

#include "pathcount/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace pathcount {

// Dense univariate polynomial with exact rational coefficients, index =
// power. Canonical form strips trailing zeros; the zero polynomial has an
// empty coefficient vector and degree -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(const Rational& constant);
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly variable();                                // q
    static UniPoly monomial(int power, const Rational& coeff);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int power) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    UniPoly& operator*=(const UniPoly& rhs);
    UniPoly& operator*=(const Rational& scalar);
    UniPoly operator-() const;

    friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
    friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
    friend UniPoly operator*(UniPoly lhs, const UniPoly& rhs) { return lhs *= rhs; }
    friend UniPoly operator*(UniPoly lhs, const Rational& scalar) { return lhs *= scalar; }
    friend UniPoly operator*(const Rational& scalar, UniPoly rhs) { return rhs *= scalar; }

    bool operator==(const UniPoly&) const = default;

    Rational operator()(const Rational& point) const;  // Horner evaluation

    UniPoly derivative() const;
    UniPoly pow(unsigned exp) const;

    // p(q + shift) expanded in q.
    UniPoly shifted(const Rational& shift) const;

    // Exact division by (q - root); throws std::domain_error when the
    // remainder is nonzero.
    UniPoly divided_by_linear(const Rational& root) const;

    // True when every coefficient is an integer.
    bool has_integer_coeffs() const;

    std::string str(std::string_view var = "q") const;

private:
    std::vector<Rational> coeffs_;
    void normalize();
};

}  // namespace pathcount
