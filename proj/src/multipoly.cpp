#include "pathcount/multipoly.hpp"

namespace pathcount {

Rational eval(const MultiPolyC& p, const std::vector<Rational>& values) {
    if (static_cast<int>(values.size()) != p.arity()) {
        throw DimensionMismatch("evaluation point length != arity");
    }
    Rational acc = 0;
    for (const auto& [e, c] : p.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (e[i] > 0) term *= pow_rational(values[i], static_cast<unsigned>(e[i]));
        }
        acc += term;
    }
    return acc;
}

UniPoly eval_c(const CqPoly& p, const std::vector<Rational>& values) {
    if (static_cast<int>(values.size()) != p.arity()) {
        throw DimensionMismatch("evaluation point length != arity");
    }
    UniPoly acc;
    for (const auto& [e, c] : p.terms()) {
        Rational scalar = 1;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (e[i] > 0) scalar *= pow_rational(values[i], static_cast<unsigned>(e[i]));
        }
        acc += c * scalar;
    }
    return acc;
}

MultiPolyC substitute_q_affine(const CqPoly& p, const Rational& shift) {
    MultiPolyC out(p.arity() + 1);
    const std::size_t last = static_cast<std::size_t>(p.arity());
    for (const auto& [e, qpoly] : p.terms()) {
        UniPoly shiftedq = qpoly.shifted(shift);  // q -> x + shift
        for (int t = 0; t <= shiftedq.degree(); ++t) {
            Rational c = shiftedq.coeff(t);
            if (c == 0) continue;
            std::vector<int> ne(e);
            ne.push_back(0);
            ne[last] = t;
            out.add_term(std::move(ne), c);
        }
    }
    return out;
}

}  // namespace pathcount
