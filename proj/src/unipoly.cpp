#include "pathcount/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace pathcount {

UniPoly::UniPoly(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UniPoly UniPoly::variable() { return monomial(1, 1); }

UniPoly UniPoly::monomial(int power, const Rational& coeff) {
    if (power < 0) throw std::invalid_argument("monomial power must be nonnegative");
    if (coeff == 0) return UniPoly();
    std::vector<Rational> c(static_cast<std::size_t>(power) + 1, Rational(0));
    c.back() = coeff;
    UniPoly p;
    p.coeffs_ = std::move(c);
    return p;
}

void UniPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(power)];
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Rational UniPoly::operator()(const Rational& point) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(i);
    return UniPoly(std::move(out));
}

UniPoly UniPoly::pow(unsigned exp) const {
    UniPoly r(Rational(1)), b = *this;
    while (exp) {
        if (exp & 1u) r *= b;
        exp >>= 1u;
        if (exp) b *= b;
    }
    return r;
}

UniPoly UniPoly::shifted(const Rational& shift) const {
    // Horner in (q + shift).
    UniPoly linear(std::vector<Rational>{shift, 1});
    UniPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= linear;
        acc += UniPoly(*it);
    }
    return acc;
}

UniPoly UniPoly::divided_by_linear(const Rational& root) const {
    if (is_zero()) return UniPoly();
    std::vector<Rational> out(coeffs_.size() - 1, Rational(0));
    Rational carry = 0;  // synthetic division, high power first
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        Rational cur = coeffs_[i] + carry * root;
        if (i == 0) {
            if (cur != 0) throw std::domain_error("polynomial not divisible by linear factor");
        } else {
            out[i - 1] = cur;
            carry = cur;
        }
    }
    return UniPoly(std::move(out));
}

bool UniPoly::has_integer_coeffs() const {
    for (const auto& c : coeffs_) {
        if (denominator(c) != 1) return false;
    }
    return true;
}

std::string UniPoly::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = mag == 1 && i > 0;
        if (!unit) os << to_string_exact(mag);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace pathcount
