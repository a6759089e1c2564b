#include "pathcount/reports.hpp"

namespace pathcount {

namespace {

using nlohmann::json;

json rationals_to_json(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string_exact(x));
    return a;
}

std::vector<Rational> rationals_from_json(const json& a) {
    std::vector<Rational> out;
    for (const auto& x : a) out.push_back(parse_rational(x.get<std::string>()));
    return out;
}

}  // namespace

json to_json(const CountResult& r) {
    return json{{"c", r.c}, {"i", r.i}, {"method", r.method}, {"count", r.count.str()}};
}

CountResult count_result_from_json(const json& j) {
    CountResult r;
    r.c = j.at("c").get<std::vector<long long>>();
    r.i = j.at("i").get<std::vector<long long>>();
    r.method = j.at("method").get<std::string>();
    r.count = Integer(j.at("count").get<std::string>());
    return r;
}

json to_json(const BValueResult& r) {
    return json{{"c", r.c},
                {"prefix", r.prefix},
                {"method", r.method},
                {"trunc", r.trunc},
                {"value", to_string_exact(r.value)}};
}

BValueResult bvalue_result_from_json(const json& j) {
    BValueResult r;
    r.c = j.at("c").get<std::vector<long long>>();
    r.prefix = j.at("prefix").get<std::vector<long long>>();
    r.method = j.at("method").get<std::string>();
    r.trunc = j.at("trunc").get<long long>();
    r.value = parse_rational(j.at("value").get<std::string>());
    return r;
}

json to_json(const TriangleResult& r) {
    json rows = json::array();
    for (const auto& row : r.values) {
        json jr = json::array();
        for (const auto& x : row) jr.push_back(x.str());
        rows.push_back(std::move(jr));
    }
    return json{{"kind", r.kind}, {"rows", r.rows}, {"values", rows}};
}

TriangleResult triangle_result_from_json(const json& j) {
    TriangleResult r;
    r.kind = j.at("kind").get<std::string>();
    r.rows = j.at("rows").get<int>();
    for (const auto& row : j.at("values")) {
        std::vector<Integer> vr;
        for (const auto& x : row) vr.emplace_back(x.get<std::string>());
        r.values.push_back(std::move(vr));
    }
    return r;
}

json to_json(const PolyResult& r) {
    return json{{"kind", r.kind}, {"n", r.n}, {"k", r.k}, {"coeffs", rationals_to_json(r.coeffs)}};
}

PolyResult poly_result_from_json(const json& j) {
    PolyResult r;
    r.kind = j.at("kind").get<std::string>();
    r.n = j.at("n").get<long long>();
    r.k = j.at("k").get<int>();
    r.coeffs = rationals_from_json(j.at("coeffs"));
    return r;
}

json to_json(const AlphaResult& r) {
    return json{{"n", r.n}, {"c_last", r.c_last}, {"alphas", rationals_to_json(r.alphas)}};
}

AlphaResult alpha_result_from_json(const json& j) {
    AlphaResult r;
    r.n = j.at("n").get<int>();
    r.c_last = j.at("c_last").get<long long>();
    r.alphas = rationals_from_json(j.at("alphas"));
    return r;
}

json to_json(const LimitReport& r) {
    json steps = json::array();
    for (const auto& s : r.steps) {
        steps.push_back(json{{"h", s.h},
                             {"ratio", to_string_exact(s.ratio)},
                             {"error", to_string_exact(s.error)}});
    }
    return json{{"c", r.c},
                {"prefix", r.prefix},
                {"reference", to_string_exact(r.reference)},
                {"steps", steps},
                {"tolerance", to_string_exact(r.tolerance)},
                {"pass", r.pass},
                {"final_decay", to_string_exact(r.final_decay)},
                {"expected_decay", to_string_exact(r.expected_decay)}};
}

LimitReport limit_report_from_json(const json& j) {
    LimitReport r;
    r.c = j.at("c").get<std::vector<long long>>();
    r.prefix = j.at("prefix").get<std::vector<long long>>();
    r.reference = parse_rational(j.at("reference").get<std::string>());
    for (const auto& s : j.at("steps")) {
        r.steps.push_back(LimitStep{s.at("h").get<int>(),
                                    parse_rational(s.at("ratio").get<std::string>()),
                                    parse_rational(s.at("error").get<std::string>())});
    }
    r.tolerance = parse_rational(j.at("tolerance").get<std::string>());
    r.pass = j.at("pass").get<bool>();
    r.final_decay = parse_rational(j.at("final_decay").get<std::string>());
    r.expected_decay = parse_rational(j.at("expected_decay").get<std::string>());
    return r;
}

json to_json(const IdentityReport& r) {
    json range = json::object();
    for (const auto& [key, value] : r.range) range[key] = value;
    json cex;
    if (r.counterexample) {
        json where = json::object();
        for (const auto& [key, value] : r.counterexample->where) where[key] = value;
        cex = json{{"where", where}, {"lhs", r.counterexample->lhs}, {"rhs", r.counterexample->rhs}};
    } else {
        cex = nullptr;
    }
    return json{{"identity", r.identity},
                {"range", range},
                {"status", r.pass ? "pass" : "fail"},
                {"counterexample", cex},
                {"notes", r.notes},
                {"elapsed_ms", r.elapsed_ms}};
}

IdentityReport identity_report_from_json(const json& j) {
    IdentityReport r;
    r.identity = j.at("identity").get<std::string>();
    for (const auto& [key, value] : j.at("range").items()) r.range[key] = value.get<long long>();
    r.pass = j.at("status").get<std::string>() == "pass";
    const auto& cex = j.at("counterexample");
    if (!cex.is_null()) {
        Counterexample c;
        for (const auto& [key, value] : cex.at("where").items()) c.where[key] = value.get<long long>();
        c.lhs = cex.at("lhs").get<std::string>();
        c.rhs = cex.at("rhs").get<std::string>();
        r.counterexample = std::move(c);
    }
    r.notes = j.at("notes").get<std::vector<std::string>>();
    r.elapsed_ms = j.at("elapsed_ms").get<long long>();
    return r;
}

}  // namespace pathcount
