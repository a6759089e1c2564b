#pragma once

#include "pathcount/growth.hpp"
#include "pathcount/identities.hpp"
#include "pathcount/rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace pathcount {

// Output payloads of the command-line tool. Exact values are serialized as
// strings ("p/q" or a plain integer literal) so nothing is rounded; vector
// parameters stay numeric arrays. Every payload round-trips through JSON.

struct CountResult {
    std::vector<long long> c;
    std::vector<long long> i;
    std::string method;  // "recurrence" | "bruteforce"
    Integer count;

    bool operator==(const CountResult&) const = default;
};

struct BValueResult {
    std::vector<long long> c;
    std::vector<long long> prefix;
    std::string method;   // "closed" | "series" | "operator"
    long long trunc = -1; // series truncation, -1 otherwise
    Rational value;

    bool operator==(const BValueResult&) const = default;
};

struct TriangleResult {
    std::string kind;  // "eulerian" | "stirling1" | "stirling2"
    int rows = 0;
    std::vector<std::vector<Integer>> values;

    bool operator==(const TriangleResult&) const = default;
};

struct PolyResult {
    std::string kind;  // "gamma" | "delta"
    long long n = 0;
    int k = 0;
    std::vector<Rational> coeffs;  // constant term first

    bool operator==(const PolyResult&) const = default;
};

struct AlphaResult {
    int n = 0;
    long long c_last = 0;
    std::vector<Rational> alphas;

    bool operator==(const AlphaResult&) const = default;
};

nlohmann::json to_json(const CountResult& r);
nlohmann::json to_json(const BValueResult& r);
nlohmann::json to_json(const TriangleResult& r);
nlohmann::json to_json(const PolyResult& r);
nlohmann::json to_json(const AlphaResult& r);
nlohmann::json to_json(const LimitReport& r);
nlohmann::json to_json(const IdentityReport& r);

CountResult count_result_from_json(const nlohmann::json& j);
BValueResult bvalue_result_from_json(const nlohmann::json& j);
TriangleResult triangle_result_from_json(const nlohmann::json& j);
PolyResult poly_result_from_json(const nlohmann::json& j);
AlphaResult alpha_result_from_json(const nlohmann::json& j);
LimitReport limit_report_from_json(const nlohmann::json& j);
IdentityReport identity_report_from_json(const nlohmann::json& j);

}  // namespace pathcount
