// Command-line front end: exact path counts, growth constants, number
// triangles, Gamma/Delta polynomials, and the identity verification suite.

#include "pathcount/errors.hpp"
#include "pathcount/gamma_delta.hpp"
#include "pathcount/growth.hpp"
#include "pathcount/identities.hpp"
#include "pathcount/path_counts.hpp"
#include "pathcount/rational.hpp"
#include "pathcount/reports.hpp"
#include "pathcount/special_numbers.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace pathcount;
using nlohmann::json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 64;
constexpr int kExitDimension = 65;
constexpr int kExitBudget = 66;
constexpr int kExitDegenerate = 67;
constexpr int kExitInternal = 70;

std::vector<long long> parse_vector(const std::string& text, const std::string& name) {
    std::vector<long long> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad " + name + " entry '" + token + "'");
        }
        if (used != token.size()) {
            throw std::invalid_argument("bad " + name + " entry '" + token + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument(name + " must be a comma-separated integer list");
    return out;
}

std::string join_ll(const std::vector<long long>& v, char sep = ',') {
    std::ostringstream os;
    for (std::size_t t = 0; t < v.size(); ++t) {
        if (t) os << sep;
        os << v[t];
    }
    return os.str();
}

std::string join_rationals(const std::vector<Rational>& v, const char* sep = "; ") {
    std::ostringstream os;
    for (std::size_t t = 0; t < v.size(); ++t) {
        if (t) os << sep;
        os << to_string_exact(v[t]);
    }
    return os.str();
}

struct Output {
    std::string format = "pretty";
    std::string out_file;

    void deliver(const std::string& text) const {
        if (out_file.empty()) {
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << "\n";
            return;
        }
        std::ofstream f(out_file);
        if (!f) throw std::runtime_error("cannot open output file '" + out_file + "'");
        f << text;
        if (!text.empty() && text.back() != '\n') f << "\n";
    }
};

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

// ---- count ----------------------------------------------------------------

int run_count(const Output& output, const std::string& c_text, const std::string& i_text,
              bool brute, long long budget) {
    ParamVec params(parse_vector(c_text, "--c"));
    MultiIndex target(parse_vector(i_text, "--i"));
    CountResult result;
    result.c = params.entries();
    result.i = target.entries();
    result.method = brute ? "bruteforce" : "recurrence";
    result.count = brute ? path_count_bruteforce(params, target, budget) : path_count(params, target);

    if (output.format == "json") {
        output.deliver(to_json(result).dump(2));
    } else if (output.format == "csv") {
        std::ostringstream os;
        os << "c,i,method,count\n";
        os << csv_escape(join_ll(result.c)) << "," << csv_escape(join_ll(result.i)) << ","
           << result.method << "," << result.count.str() << "\n";
        output.deliver(os.str());
    } else {
        std::ostringstream os;
        os << "c=(" << join_ll(result.c) << ") i=(" << join_ll(result.i)
           << ") method=" << result.method << " count=" << result.count.str();
        output.deliver(os.str());
    }
    return 0;
}

// ---- bvalue ---------------------------------------------------------------

int run_bvalue(const Output& output, const std::string& c_text, const std::string& prefix_text,
               const std::string& method, long long trunc, long long map_budget) {
    ParamVec params(parse_vector(c_text, "--c"));
    std::vector<long long> prefix = parse_vector(prefix_text, "--prefix");

    BValueResult result;
    result.c = params.entries();
    result.prefix = prefix;
    result.method = method;
    if (method == "closed") {
        long long m = 0;
        for (long long x : prefix) m += x;
        if (m > map_budget) {
            throw BudgetExceeded("prefix weight m = " + std::to_string(m) +
                                 " exceeds map enumeration budget " + std::to_string(map_budget));
        }
        result.value = b_closed_form(params, prefix);
    } else if (method == "series") {
        result.trunc = trunc;
        result.value = b_truncated_series(params, prefix, trunc, map_budget);
    } else if (method == "operator") {
        for (long long x : prefix) {
            if (x != 1) {
                throw std::invalid_argument(
                    "--method operator requires the all-ones prefix; use closed or series");
            }
        }
        if (static_cast<int>(prefix.size()) != params.n()) {
            throw DimensionMismatch("prefix length " + std::to_string(prefix.size()) +
                                    " != parameter dimension - 1 = " + std::to_string(params.n()));
        }
        result.value = b_operator_exact(params);
    } else {
        throw std::invalid_argument("unknown --method '" + method + "'");
    }

    if (output.format == "json") {
        output.deliver(to_json(result).dump(2));
    } else if (output.format == "csv") {
        std::ostringstream os;
        os << "c,prefix,method,trunc,value\n";
        os << csv_escape(join_ll(result.c)) << "," << csv_escape(join_ll(result.prefix)) << ","
           << result.method << "," << result.trunc << "," << csv_escape(to_string_exact(result.value))
           << "\n";
        output.deliver(os.str());
    } else {
        std::ostringstream os;
        os << "c=(" << join_ll(result.c) << ") prefix=(" << join_ll(result.prefix)
           << ") method=" << result.method;
        if (result.method == "series") os << " trunc=" << result.trunc;
        os << " value=" << to_string_exact(result.value) << " ~" << decimal_string(result.value, 9);
        output.deliver(os.str());
    }
    return 0;
}

// ---- limit ----------------------------------------------------------------

int run_limit(const Output& output, const std::string& c_text, const std::string& prefix_text,
              int max_h, const std::string& tol_text) {
    ParamVec params(parse_vector(c_text, "--c"));
    std::vector<long long> prefix = parse_vector(prefix_text, "--prefix");
    Rational tol = parse_rational(tol_text);
    LimitReport report = limit_verify(params, prefix, max_h, tol);

    if (output.format == "json") {
        output.deliver(to_json(report).dump(2));
    } else if (output.format == "csv") {
        std::ostringstream os;
        os << "h,ratio,error,error_decimal,reference,tolerance,pass\n";
        for (const auto& s : report.steps) {
            os << s.h << "," << csv_escape(to_string_exact(s.ratio)) << ","
               << csv_escape(to_string_exact(s.error)) << "," << decimal_string(s.error, 12) << ","
               << csv_escape(to_string_exact(report.reference)) << ","
               << csv_escape(to_string_exact(report.tolerance)) << ","
               << (report.pass ? "pass" : "fail") << "\n";
        }
        output.deliver(os.str());
    } else {
        std::ostringstream os;
        os << "c=(" << join_ll(report.c) << ") prefix=(" << join_ll(report.prefix)
           << ") reference=" << to_string_exact(report.reference) << " ~"
           << decimal_string(report.reference, 9) << "\n";
        os << "  h  ratio                 error(exact)          error(~)\n";
        for (const auto& s : report.steps) {
            std::string ratio = to_string_exact(s.ratio);
            std::string err = to_string_exact(s.error);
            if (ratio.size() > 20) ratio = decimal_string(s.ratio, 12) + "...";
            if (err.size() > 20) err = "~" + decimal_string(s.error, 15);
            os << "  " << s.h << "\t" << ratio << "\t" << err << "\t" << decimal_string(s.error, 12)
               << "\n";
        }
        os << "tolerance=" << to_string_exact(report.tolerance) << " pass="
           << (report.pass ? "yes" : "no") << " final_decay~" << decimal_string(report.final_decay, 6)
           << " expected_decay=" << to_string_exact(report.expected_decay);
        output.deliver(os.str());
    }
    return report.pass ? 0 : kExitVerifyFailed;
}

// ---- table ----------------------------------------------------------------

int run_table(const Output& output, const std::string& kind, int rows) {
    if (rows < 1) throw std::invalid_argument("--rows must be at least 1");
    TriangleResult result;
    result.kind = kind;
    result.rows = rows;
    if (kind == "eulerian") {
        for (int t = 0; t < rows; ++t) {
            std::vector<Integer> row;
            for (int i = 0; i <= t; ++i) row.push_back(eulerian(i, t - i));
            result.values.push_back(std::move(row));
        }
    } else if (kind == "stirling1") {
        for (int n = 1; n <= rows; ++n) {
            std::vector<Integer> row;
            for (int k = 1; k <= n; ++k) row.push_back(stirling1(n, k));
            result.values.push_back(std::move(row));
        }
    } else if (kind == "stirling2") {
        for (int k = 1; k <= rows; ++k) {
            std::vector<Integer> row;
            for (int m = 1; m <= k; ++m) row.push_back(stirling2(k, m));
            result.values.push_back(std::move(row));
        }
    } else {
        throw std::invalid_argument("unknown --kind '" + kind + "'");
    }

    if (output.format == "json") {
        output.deliver(to_json(result).dump(2));
    } else if (output.format == "csv") {
        std::ostringstream os;
        for (const auto& row : result.values) {
            for (std::size_t t = 0; t < row.size(); ++t) {
                if (t) os << ",";
                os << row[t].str();
            }
            os << "\n";
        }
        output.deliver(os.str());
    } else {
        std::ostringstream os;
        os << kind << " triangle, " << rows << " rows\n";
        for (const auto& row : result.values) {
            for (std::size_t t = 0; t < row.size(); ++t) {
                if (t) os << " ";
                os << row[t].str();
            }
            os << "\n";
        }
        output.deliver(os.str());
    }
    return 0;
}

// ---- poly -----------------------------------------------------------------

int run_poly(const Output& output, const std::string& kind, int k, long long n) {
    PolyResult result;
    result.kind = kind;
    result.n = n;
    result.k = k;
    UniPoly poly;
    if (kind == "gamma") {
        poly = gamma_poly(k, n).poly;
    } else if (kind == "delta") {
        if (n > static_cast<long long>(std::numeric_limits<int>::max())) {
            throw std::invalid_argument("--n too large for delta");
        }
        poly = delta_poly(static_cast<int>(n), k).poly;
    } else {
        throw std::invalid_argument("unknown --kind '" + kind + "'");
    }
    for (int t = 0; t <= poly.degree(); ++t) result.coeffs.push_back(poly.coeff(t));
    if (result.coeffs.empty()) result.coeffs.emplace_back(0);

    if (output.format == "json") {
        output.deliver(to_json(result).dump(2));
    } else if (output.format == "csv") {
        std::ostringstream os;
        os << "kind,n,k,coeffs\n";
        os << kind << "," << n << "," << k << "," << csv_escape(join_rationals(result.coeffs))
           << "\n";
        output.deliver(os.str());
    } else {
        std::ostringstream os;
        os << kind << " n=" << n << " k=" << k << ": " << poly.str()
           << "\n  coeffs (constant first): [" << join_rationals(result.coeffs, ", ") << "]";
        output.deliver(os.str());
    }
    return 0;
}

// ---- alpha ----------------------------------------------------------------

int run_alpha(const Output& output, int n, long long c_last) {
    AlphaResult result;
    result.n = n;
    result.c_last = c_last;
    result.alphas = alpha_decomposition(n, c_last);

    if (output.format == "json") {
        output.deliver(to_json(result).dump(2));
    } else if (output.format == "csv") {
        std::ostringstream os;
        os << "n,c_last,alphas\n";
        os << n << "," << c_last << "," << csv_escape(join_rationals(result.alphas)) << "\n";
        output.deliver(os.str());
    } else {
        std::ostringstream os;
        os << "n=" << n << " c_last=" << c_last << " alphas (alpha_0 first): ["
           << join_rationals(result.alphas, ", ") << "]";
        output.deliver(os.str());
    }
    return 0;
}

// ---- verify ---------------------------------------------------------------

std::string range_str(const std::map<std::string, long long>& range) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, value] : range) {
        if (!first) os << " ";
        first = false;
        os << key << "=" << value;
    }
    return os.str();
}

int run_verify(const Output& output, const std::string& identity, int max_n, int max_k, int max_a) {
    VerifyCeilings ceilings;
    if (max_n > 0) {
        ceilings.colyrel_max_n = max_n;
        ceilings.stirling_form_max_n = max_n;
        ceilings.coefs_max_n = max_n;
        ceilings.star_max_n = max_n;
        ceilings.known_s1_max_n = max_n;
        ceilings.frobenius_max_n = max_n;
        ceilings.new_n_max_n = max_n;
    }
    if (max_k > 0) {
        ceilings.frobenius_max_k = max_k;
        ceilings.thm1_max_k = max_k;
    }
    if (max_a > 0) ceilings.thm1_max_a = max_a;

    std::vector<IdentityReport> reports;
    if (identity == "all") {
        reports = verify_all(ceilings);
    } else if (identity == "colyrel") {
        reports.push_back(verify_colyrel(ceilings.colyrel_max_n));
    } else if (identity == "stirling_form") {
        reports.push_back(verify_stirling_form(ceilings.stirling_form_max_n));
    } else if (identity == "coefs") {
        reports.push_back(verify_coefs(ceilings.coefs_max_n));
    } else if (identity == "star") {
        reports.push_back(verify_star(ceilings.star_max_n));
    } else if (identity == "known_s1") {
        reports.push_back(verify_known_s1(ceilings.known_s1_max_n));
    } else if (identity == "frobenius") {
        reports.push_back(verify_frobenius(ceilings.frobenius_max_k, ceilings.frobenius_max_n));
    } else if (identity == "thm1") {
        reports.push_back(verify_thm1(ceilings.thm1_max_k, ceilings.thm1_max_a));
    } else if (identity == "new_n") {
        reports.push_back(verify_new_n(ceilings.new_n_max_n));
    } else {
        throw std::invalid_argument("unknown --identity '" + identity + "'");
    }

    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass;

    if (output.format == "json") {
        if (reports.size() == 1) {
            output.deliver(to_json(reports.front()).dump(2));
        } else {
            json arr = json::array();
            for (const auto& r : reports) arr.push_back(to_json(r));
            output.deliver(arr.dump(2));
        }
    } else if (output.format == "csv") {
        std::ostringstream os;
        os << "identity,range,status,counterexample,elapsed_ms\n";
        for (const auto& r : reports) {
            std::string cex;
            if (r.counterexample) {
                cex = range_str(r.counterexample->where) + " lhs=" + r.counterexample->lhs +
                      " rhs=" + r.counterexample->rhs;
            }
            os << r.identity << "," << csv_escape(range_str(r.range)) << ","
               << (r.pass ? "pass" : "fail") << "," << csv_escape(cex) << "," << r.elapsed_ms
               << "\n";
        }
        output.deliver(os.str());
    } else {
        std::ostringstream os;
        for (const auto& r : reports) {
            os << r.identity << " [" << range_str(r.range) << "] "
               << (r.pass ? "pass" : "FAIL") << " (" << r.elapsed_ms << " ms)";
            if (r.counterexample) {
                os << "\n  counterexample at " << range_str(r.counterexample->where)
                   << "\n    lhs = " << r.counterexample->lhs
                   << "\n    rhs = " << r.counterexample->rhs;
            }
            for (const auto& note : r.notes) os << "\n  note: " << note;
            os << "\n";
        }
        output.deliver(os.str());
    }
    return all_pass ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact path counts, growth constants, and identity checks"};
    app.require_subcommand(1);

    Output output;
    app.add_option("--format", output.format, "output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", output.out_file, "write output to this file instead of stdout");

    std::string c_text, i_text, prefix_text;
    std::string method = "closed", tol_text = "1e-3", kind, identity = "all";
    bool brute = false;
    long long budget = 12, trunc = 100, map_budget = 8, poly_n = 1, c_last = 0;
    int max_h = 30, rows = 10, poly_k = 1, alpha_n = 1, max_n = 0, max_k = 0, max_a = 0;

    auto* count_cmd = app.add_subcommand("count", "path count A_c(i)");
    count_cmd->add_option("--c", c_text, "parameters c_1,...,c_{n+1}")->required();
    count_cmd->add_option("--i", i_text, "target index i_1,...,i_{n+1}")->required();
    count_cmd->add_flag("--brute", brute, "enumerate step orderings instead of the recurrence");
    count_cmd->add_option("--budget", budget, "step budget for --brute")->capture_default_str();

    auto* bvalue_cmd = app.add_subcommand("bvalue", "growth constant B_c(prefix)");
    bvalue_cmd->add_option("--c", c_text, "parameters c_1,...,c_{n+1}")->required();
    bvalue_cmd->add_option("--prefix", prefix_text, "prefix i_1,...,i_n")->required();
    bvalue_cmd->add_option("--method", method, "closed | series | operator")->capture_default_str();
    bvalue_cmd->add_option("--trunc", trunc, "series truncation N")->capture_default_str();
    bvalue_cmd->add_option("--map-budget", map_budget, "bound on sum(prefix) for map enumeration")
        ->capture_default_str();

    auto* limit_cmd = app.add_subcommand("limit", "normalized count ratios against the growth constant");
    limit_cmd->add_option("--c", c_text, "parameters c_1,...,c_{n+1}")->required();
    limit_cmd->add_option("--prefix", prefix_text, "prefix i_1,...,i_n")->required();
    limit_cmd->add_option("--max-h", max_h, "number of steps")->capture_default_str();
    limit_cmd->add_option("--tol", tol_text, "tolerance for the final error (exact rational or decimal)")
        ->capture_default_str();

    auto* table_cmd = app.add_subcommand("table", "number triangles");
    table_cmd->add_option("--kind", kind, "eulerian | stirling1 | stirling2")->required();
    table_cmd->add_option("--rows", rows, "row count")->capture_default_str();

    auto* poly_cmd = app.add_subcommand("poly", "Gamma and Delta polynomials");
    poly_cmd->add_option("--kind", kind, "gamma | delta")->required();
    poly_cmd->add_option("--k", poly_k, "index k")->required();
    poly_cmd->add_option("--n", poly_n, "index n")->required();

    auto* alpha_cmd = app.add_subcommand("alpha", "growth constant decomposition coefficients");
    alpha_cmd->add_option("--n", alpha_n, "dimension n")->required();
    alpha_cmd->add_option("--c-last", c_last, "last parameter entry")->required();

    auto* verify_cmd = app.add_subcommand("verify", "identity verification suite");
    verify_cmd
        ->add_option("--identity", identity,
                     "colyrel | stirling_form | coefs | star | known_s1 | frobenius | thm1 | new_n | all")
        ->capture_default_str();
    verify_cmd->add_option("--max-n", max_n, "override the n ceiling (0 = default)");
    verify_cmd->add_option("--max-k", max_k, "override the k ceiling (0 = default)");
    verify_cmd->add_option("--max-a", max_a, "override the a ceiling (0 = default)");

    // --format/--out stay valid after the subcommand name
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*count_cmd) return run_count(output, c_text, i_text, brute, budget);
        if (*bvalue_cmd) return run_bvalue(output, c_text, prefix_text, method, trunc, map_budget);
        if (*limit_cmd) return run_limit(output, c_text, prefix_text, max_h, tol_text);
        if (*table_cmd) return run_table(output, kind, rows);
        if (*poly_cmd) return run_poly(output, kind, poly_k, poly_n);
        if (*alpha_cmd) return run_alpha(output, alpha_n, c_last);
        if (*verify_cmd) return run_verify(output, identity, max_n, max_k, max_a);
        std::cerr << "no subcommand selected\n";
        return kExitUsage;
    } catch (const DimensionMismatch& e) {
        std::cerr << "dimension mismatch: " << e.what() << "\n";
        return kExitDimension;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const DegenerateNormalizer& e) {
        std::cerr << "degenerate normalizer: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
