#include "pathcount/special_numbers.hpp"

#include <mutex>
#include <stdexcept>

namespace pathcount {

Integer EulerianTable::at(int i, int j) const {
    if (i < 0 || j < 0) return 0;
    const int t = i + j;
    {
        std::shared_lock lock(mutex_);
        if (t < static_cast<int>(diagonals_.size())) return diagonals_[t][i];
    }
    std::unique_lock lock(mutex_);
    grow(t);
    return diagonals_[t][i];
}

void EulerianTable::grow(int t) const {
    if (diagonals_.empty()) diagonals_.push_back({Integer(1)});
    while (static_cast<int>(diagonals_.size()) <= t) {
        const int d = static_cast<int>(diagonals_.size());
        const auto& prev = diagonals_[d - 1];
        std::vector<Integer> row(d + 1);
        for (int i = 0; i <= d; ++i) {
            // A(i, d-i) = (i+1)*A(i, d-i-1) + (d-i+1)*A(i-1, d-i)
            Integer acc = 0;
            if (i < d) acc += Integer(i + 1) * prev[i];
            if (i > 0) acc += Integer(d - i + 1) * prev[i - 1];
            row[i] = std::move(acc);
        }
        diagonals_.push_back(std::move(row));
    }
}

Integer StirlingTables::first(int n, int k) const {
    if (n < 1 || k < 1 || k > n) return 0;
    {
        std::shared_lock lock(mutex_);
        if (n <= static_cast<int>(s1_rows_.size())) return s1_rows_[n - 1][k - 1];
    }
    std::unique_lock lock(mutex_);
    grow(n);
    return s1_rows_[n - 1][k - 1];
}

Integer StirlingTables::second(int k, int m) const {
    if (k < 1 || m < 1 || m > k) return 0;
    {
        std::shared_lock lock(mutex_);
        if (k <= static_cast<int>(s2_rows_.size())) return s2_rows_[k - 1][m - 1];
    }
    std::unique_lock lock(mutex_);
    grow(k);
    return s2_rows_[k - 1][m - 1];
}

void StirlingTables::grow(int n) const {
    if (s1_rows_.empty()) {
        s1_rows_.push_back({Integer(1)});
        s2_rows_.push_back({Integer(1)});
    }
    while (static_cast<int>(s1_rows_.size()) < n) {
        const int r = static_cast<int>(s1_rows_.size()) + 1;  // building row r
        const auto& p1 = s1_rows_.back();
        const auto& p2 = s2_rows_.back();
        std::vector<Integer> r1(r), r2(r);
        for (int k = 1; k <= r; ++k) {
            Integer a = k > 1 ? p1[k - 2] : Integer(0);
            if (k < r) a -= Integer(r - 1) * p1[k - 1];
            r1[k - 1] = std::move(a);
            Integer b = k > 1 ? p2[k - 2] : Integer(0);
            if (k < r) b += Integer(k) * p2[k - 1];
            r2[k - 1] = std::move(b);
        }
        s1_rows_.push_back(std::move(r1));
        s2_rows_.push_back(std::move(r2));
    }
}

EulerianTable& eulerian_table() {
    static EulerianTable table;
    return table;
}

StirlingTables& stirling_tables() {
    static StirlingTables tables;
    return tables;
}

Integer eulerian(int i, int j) { return eulerian_table().at(i, j); }
Integer stirling1(int n, int k) { return stirling_tables().first(n, k); }
Integer stirling2(int k, int m) { return stirling_tables().second(k, m); }

namespace {

std::shared_mutex binomial_mutex;
std::vector<std::vector<Integer>> binomial_rows{{Integer(1)}};  // row a holds C(a,0..a)

}  // namespace

Integer binomial(long long a, long long b) {
    if (b < 0 || b > a) return 0;  // covers a < 0 as well
    if (a > 1'000'000) throw std::invalid_argument("binomial argument too large");
    const auto an = static_cast<std::size_t>(a);
    const auto bn = static_cast<std::size_t>(b);
    {
        std::shared_lock lock(binomial_mutex);
        if (an < binomial_rows.size()) return binomial_rows[an][bn];
    }
    std::unique_lock lock(binomial_mutex);
    while (binomial_rows.size() <= an) {
        const auto& prev = binomial_rows.back();
        std::vector<Integer> row(binomial_rows.size() + 1, Integer(1));
        for (std::size_t i = 1; i + 1 < row.size(); ++i) row[i] = prev[i - 1] + prev[i];
        binomial_rows.push_back(std::move(row));
    }
    return binomial_rows[an][bn];
}

UniPoly falling_factorial(int n) {
    if (n < 0) throw std::invalid_argument("falling factorial needs n >= 0");
    UniPoly p(Rational(1));
    for (int t = 0; t < n; ++t) {
        p *= UniPoly(std::vector<Rational>{Rational(-t), 1});
    }
    return p;
}

Integer sigma_elementary(const std::vector<Integer>& c, int i) {
    if (i < 0) throw std::invalid_argument("elementary symmetric index must be nonnegative");
    if (i > static_cast<int>(c.size())) return 0;
    // coefficients of prod (1 + c_j x), kept up to degree i
    std::vector<Integer> coeffs(static_cast<std::size_t>(i) + 1, Integer(0));
    coeffs[0] = 1;
    std::size_t top = 0;
    for (const auto& x : c) {
        top = std::min(top + 1, static_cast<std::size_t>(i));
        for (std::size_t t = top; t >= 1; --t) coeffs[t] += x * coeffs[t - 1];
    }
    return coeffs[static_cast<std::size_t>(i)];
}

}  // namespace pathcount
