#pragma once

#include "pathcount/errors.hpp"
#include "pathcount/rational.hpp"
#include "pathcount/unipoly.hpp"

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace pathcount {

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const Integer& c) { return c == 0; }
inline bool coeff_is_zero(const UniPoly& c) { return c.is_zero(); }

// Sparse multivariate polynomial over a fixed number of variables, keyed by
// exponent vectors. The coefficient type is Rational for ordinary
// polynomials and UniPoly for polynomials whose coefficients are themselves
// polynomials in a distinguished extra variable.
template <typename Coeff>
class MultiPoly {
public:
    using Exponents = std::vector<int>;

    explicit MultiPoly(int arity) : arity_(arity) {
        if (arity < 0) throw std::invalid_argument("arity must be nonnegative");
    }

    static MultiPoly constant(int arity, const Coeff& value) {
        MultiPoly p(arity);
        p.add_term(Exponents(static_cast<std::size_t>(arity), 0), value);
        return p;
    }

    static MultiPoly variable(int arity, int index) {
        if (index < 0 || index >= arity) throw std::invalid_argument("variable index out of range");
        MultiPoly p(arity);
        Exponents e(static_cast<std::size_t>(arity), 0);
        e[static_cast<std::size_t>(index)] = 1;
        p.add_term(std::move(e), Coeff(1));
        return p;
    }

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Coeff>& terms() const { return terms_; }

    void add_term(Exponents exponents, const Coeff& value) {
        if (static_cast<int>(exponents.size()) != arity_) {
            throw DimensionMismatch("exponent vector length != arity");
        }
        if (coeff_is_zero(value)) return;
        auto [it, inserted] = terms_.emplace(std::move(exponents), value);
        if (!inserted) {
            it->second += value;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    Coeff coefficient(const Exponents& exponents) const {
        auto it = terms_.find(exponents);
        return it == terms_.end() ? Coeff() : it->second;
    }

    MultiPoly& operator+=(const MultiPoly& rhs) {
        check_arity(rhs);
        for (const auto& [e, c] : rhs.terms_) add_term(e, c);
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& rhs) {
        check_arity(rhs);
        for (const auto& [e, c] : rhs.terms_) {
            Coeff neg = c;
            neg *= -1;
            add_term(e, neg);
        }
        return *this;
    }

    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }

    friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
        lhs.check_arity(rhs);
        MultiPoly out(lhs.arity_);
        for (const auto& [ea, ca] : lhs.terms_) {
            for (const auto& [eb, cb] : rhs.terms_) {
                Exponents e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                Coeff c = ca;
                c *= cb;
                out.add_term(std::move(e), c);
            }
        }
        return out;
    }

    template <typename Scalar>
    MultiPoly& scale(const Scalar& s) {
        std::map<Exponents, Coeff> out;
        for (const auto& [e, c] : terms_) {
            Coeff nc = c;
            nc *= s;
            if (!coeff_is_zero(nc)) out.emplace(e, std::move(nc));
        }
        terms_ = std::move(out);
        return *this;
    }

    // Relabels variables: new variable i gets old variable perm[i].
    MultiPoly permuted(const std::vector<int>& perm) const {
        if (static_cast<int>(perm.size()) != arity_) {
            throw DimensionMismatch("permutation length != arity");
        }
        MultiPoly out(arity_);
        for (const auto& [e, c] : terms_) {
            Exponents ne(static_cast<std::size_t>(arity_), 0);
            for (int i = 0; i < arity_; ++i) {
                ne[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            }
            out.add_term(std::move(ne), c);
        }
        return out;
    }

    bool operator==(const MultiPoly&) const = default;

    std::string str(std::string_view varprefix = "c") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << coeff_str(c) << ")";
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                os << "*" << varprefix << i + 1;
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

private:
    int arity_;
    std::map<Exponents, Coeff> terms_;

    void check_arity(const MultiPoly& rhs) const {
        if (arity_ != rhs.arity_) throw DimensionMismatch("mixed-arity polynomial arithmetic");
    }

    static std::string coeff_str(const Rational& c) { return to_string_exact(c); }
    static std::string coeff_str(const Integer& c) { return c.str(); }
    static std::string coeff_str(const UniPoly& c) { return c.str(); }
};

// Polynomial in c_1..c_n with rational coefficients.
using MultiPolyC = MultiPoly<Rational>;

// Polynomial in c_1..c_n whose coefficients are polynomials in q.
using CqPoly = MultiPoly<UniPoly>;

// Evaluate at rational points; values length must equal arity.
Rational eval(const MultiPolyC& p, const std::vector<Rational>& values);

// Evaluate the c variables at rational points, leaving a polynomial in q.
UniPoly eval_c(const CqPoly& p, const std::vector<Rational>& values);

// Substitute q -> (x + shift) where x becomes a new trailing variable: the
// result has arity p.arity() + 1 with plain rational coefficients.
MultiPolyC substitute_q_affine(const CqPoly& p, const Rational& shift);

}  // namespace pathcount
