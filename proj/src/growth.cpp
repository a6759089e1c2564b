#include "pathcount/growth.hpp"

#include "pathcount/errors.hpp"
#include "pathcount/operator_calculus.hpp"
#include "pathcount/special_numbers.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace pathcount {

namespace {

void require_prefix(const ParamVec& params, const std::vector<long long>& prefix) {
    if (static_cast<int>(prefix.size()) != params.n()) {
        throw DimensionMismatch("prefix length " + std::to_string(prefix.size()) +
                                " != parameter dimension - 1 = " + std::to_string(params.n()));
    }
    for (long long x : prefix) {
        if (x < 0) throw std::invalid_argument("prefix entries must be nonnegative");
    }
}

}  // namespace

MapFamily::MapFamily(std::vector<long long> prefix) : prefix_(std::move(prefix)) {
    for (long long x : prefix_) {
        if (x < 0) throw std::invalid_argument("prefix entries must be nonnegative");
        m_ += x;
    }
    if (m_ > 1'000'000) throw BudgetExceeded("map family step count too large");
}

Integer MapFamily::size() const {
    Integer s = factorial(static_cast<unsigned>(m_));
    for (long long x : prefix_) s /= factorial(static_cast<unsigned>(x));
    return s;
}

void MapFamily::for_each(const std::function<void(const std::vector<int>&)>& fn) const {
    std::vector<int> labels;
    labels.reserve(static_cast<std::size_t>(m_));
    for (std::size_t j = 0; j < prefix_.size(); ++j) {
        for (long long t = 0; t < prefix_[j]; ++t) labels.push_back(static_cast<int>(j) + 1);
    }
    do {
        fn(labels);
    } while (std::next_permutation(labels.begin(), labels.end()));
}

Rational b_closed_form(const ParamVec& params, const std::vector<long long>& prefix) {
    require_prefix(params, prefix);
    MapFamily family(prefix);
    const long long m = family.steps();
    const long long clast = params.last();

    Integer sum = 0;
    family.for_each([&](const std::vector<int>& f) {
        Integer prod = 1;
        for (std::size_t j = 0; j < f.size(); ++j) {
            prod *= params[f[j] - 1] + clast + static_cast<long long>(j);
        }
        sum += prod;
    });
    Rational scale(pow_integer(Integer(clast + m), static_cast<unsigned>(m)),
                   factorial(static_cast<unsigned>(m)));
    return scale * Rational(sum);
}

namespace {

// DP scalars are Integer numerators over an implicit power of M, so the
// whole series evaluation performs a single gcd reduction at the very end.
struct LevelSums {
    // g[p] = sum_{j=0}^{N} j^p rho^j M^(N-j), p = 0..maxp
    std::vector<Integer> g;
};

LevelSums geometric_power_sums(const Integer& rho, const Integer& M, long long N, int maxp) {
    LevelSums out;
    out.g.assign(static_cast<std::size_t>(maxp) + 1, Integer(0));
    // pw = rho^j M^(N-j)
    Integer pw = pow_integer(M, static_cast<unsigned>(N));
    for (long long j = 0; j <= N; ++j) {
        Integer jp = 1;
        for (int p = 0; p <= maxp; ++p) {
            if (p > 0) jp *= j;
            if (p == 0 || j > 0) out.g[static_cast<std::size_t>(p)] += jp * pw;
        }
        if (j < N) {
            pw *= rho;
            pw /= M;
        }
    }
    return out;
}

}  // namespace

Rational b_truncated_series(const ParamVec& params, const std::vector<long long>& prefix,
                            long long trunc, long long map_budget) {
    require_prefix(params, prefix);
    if (trunc < 0) throw std::invalid_argument("truncation must be nonnegative");
    long long m = 0;
    for (long long x : prefix) m += x;
    if (m == 0) return 1;
    if (m > map_budget) {
        throw BudgetExceeded("prefix weight m = " + std::to_string(m) +
                             " exceeds map enumeration budget " + std::to_string(map_budget));
    }
    const long long clast = params.last();
    const Integer M(clast + m);
    if (M == 0) {
        throw DegenerateNormalizer("normalizer c_last + sum(prefix) = 0 for c = " + params.str());
    }

    // Per level k the geometric sums with rho_k = c_last + k - 1.
    std::vector<LevelSums> sums;
    sums.reserve(static_cast<std::size_t>(m));
    for (long long k = 1; k <= m; ++k) {
        sums.push_back(geometric_power_sums(Integer(clast + k - 1), M, trunc,
                                            static_cast<int>(m - k + 1)));
    }

    // S(f) = T_1(0) where T_{m+1} = 1 and
    //   T_k(s) = sum_{j=0}^{N} r_k^j (c_{f(k)} + s + j) T_{k+1}(s+j),
    // expanded with U_beta(s) = sum_j r_k^j (s+j)^beta. Every T_k is held as
    // integer coefficients over M^((m-k+1)N).
    MapFamily family(prefix);
    Integer total = 0;  // over M^(mN)
    family.for_each([&](const std::vector<int>& f) {
        std::vector<Integer> t{Integer(1)};
        for (long long k = m; k >= 1; --k) {
            const Integer b(params[f[static_cast<std::size_t>(k - 1)] - 1]);
            const auto& g = sums[static_cast<std::size_t>(k - 1)].g;
            std::vector<Integer> nt(t.size() + 1, Integer(0));
            for (std::size_t alpha = 0; alpha < t.size(); ++alpha) {
                if (t[alpha] == 0) continue;
                if (b != 0) {
                    const Integer tb = t[alpha] * b;
                    for (std::size_t p = 0; p <= alpha; ++p) {
                        nt[alpha - p] += tb * binomial(static_cast<long long>(alpha),
                                                       static_cast<long long>(p)) * g[p];
                    }
                }
                for (std::size_t p = 0; p <= alpha + 1; ++p) {
                    nt[alpha + 1 - p] += t[alpha] * binomial(static_cast<long long>(alpha) + 1,
                                                             static_cast<long long>(p)) * g[p];
                }
            }
            t = std::move(nt);
        }
        total += t[0];
    });
    return Rational(total, pow_integer(M, static_cast<unsigned>(m * trunc)));
}

namespace {

std::shared_mutex expansion_mutex;
std::map<int, CqPoly> expansion_cache;

const CqPoly& cached_operator_expansion(int n) {
    {
        std::shared_lock lock(expansion_mutex);
        auto it = expansion_cache.find(n);
        if (it != expansion_cache.end()) return it->second;
    }
    std::unique_lock lock(expansion_mutex);
    auto it = expansion_cache.find(n);
    if (it == expansion_cache.end()) {
        it = expansion_cache.emplace(n, operator_product_sum(n)).first;
    }
    return it->second;
}

}  // namespace

Rational b_operator_exact(const ParamVec& params) {
    const int n = params.n();
    const CqPoly& expansion = cached_operator_expansion(n);
    std::vector<Rational> cvals;
    cvals.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) cvals.emplace_back(params[j]);
    UniPoly qpoly = eval_c(expansion, cvals);
    return qpoly(Rational(params.last() + n));
}

MultiPolyC b_operator_exact_symbolic(int n) {
    if (n < 1) throw std::invalid_argument("b_operator_exact_symbolic needs n >= 1");
    return substitute_q_affine(cached_operator_expansion(n), Rational(n));
}

LimitReport limit_verify(const ParamVec& params, const std::vector<long long>& prefix, int max_h,
                         const Rational& tolerance) {
    if (tolerance <= 0) throw std::invalid_argument("tolerance must be positive");
    LimitReport report;
    report.c = params.entries();
    report.prefix = prefix;
    report.tolerance = tolerance;
    report.reference = b_closed_form(params, prefix);

    long long m = 0;
    for (long long x : prefix) m += x;
    const long long base = params.last() + m;
    report.expected_decay = base > 1 ? Rational(base - 1, base) : Rational(0);

    std::vector<Rational> ratios = ratio_sequence(params, prefix, max_h);
    report.steps.reserve(ratios.size());
    for (std::size_t t = 0; t < ratios.size(); ++t) {
        Rational err = ratios[t] - report.reference;
        if (err < 0) err = -err;
        report.steps.push_back({static_cast<int>(t) + 1, ratios[t], err});
    }
    const Rational& last_err = report.steps.back().error;
    report.pass = last_err < tolerance;
    if (report.steps.size() >= 2) {
        const Rational& prev = report.steps[report.steps.size() - 2].error;
        report.final_decay = prev != 0 ? Rational(last_err / prev) : Rational(0);
    }
    return report;
}

std::vector<Rational> alpha_decomposition(int n, long long c_last) {
    if (n < 0) throw std::invalid_argument("alpha_decomposition needs n >= 0");
    if (c_last < 0) throw std::invalid_argument("alpha_decomposition needs c_last >= 0");
    UniPoly p(Rational(1));
    for (int k = 1; k <= n; ++k) {
        p *= UniPoly(std::vector<Rational>{Rational(c_last + k - 1), 1});
    }
    p *= Rational(pow_integer(Integer(c_last + n), static_cast<unsigned>(n)),
                  factorial(static_cast<unsigned>(n)));
    std::vector<Rational> out(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int i = 0; i <= n; ++i) out[static_cast<std::size_t>(i)] = p.coeff(i);
    return out;
}

}  // namespace pathcount
