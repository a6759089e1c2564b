#include "pathcount/path_counts.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace pathcount {

namespace {

std::string join(const std::vector<long long>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    return os.str();
}

void require_nonnegative(const std::vector<long long>& v, const char* what) {
    for (long long x : v) {
        if (x < 0) throw std::invalid_argument(std::string(what) + " entries must be nonnegative");
    }
}

void require_same_dimension(const ParamVec& params, const MultiIndex& target) {
    if (params.dimension() != target.dimension()) {
        throw DimensionMismatch("index dimension " + std::to_string(target.dimension()) +
                                " != parameter dimension " + std::to_string(params.dimension()));
    }
}

}  // namespace

ParamVec::ParamVec(std::vector<long long> entries) : entries_(std::move(entries)) {
    if (entries_.size() < 2) {
        throw std::invalid_argument("parameter vector needs at least 2 entries");
    }
    require_nonnegative(entries_, "parameter vector");
}

std::string ParamVec::str() const { return "(" + join(entries_) + ")"; }

MultiIndex::MultiIndex(std::vector<long long> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("index needs at least 1 entry");
    require_nonnegative(entries_, "index");
}

long long MultiIndex::total() const {
    long long t = 0;
    for (long long x : entries_) t += x;
    return t;
}

std::string MultiIndex::str() const { return "(" + join(entries_) + ")"; }

PathCountTable::PathCountTable(ParamVec params) : params_(std::move(params)) {}

Integer PathCountTable::count(const MultiIndex& target) {
    require_same_dimension(params_, target);
    {
        std::shared_lock lock(mutex_);
        auto it = memo_.find(target.entries());
        if (it != memo_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    fill_box(target.entries());
    return memo_[target.entries()];
}

void PathCountTable::fill_box(const std::vector<long long>& target) {
    // Layer t holds every v <= target (componentwise) with |v| = t; its
    // recurrence inputs live in layer t-1 inside the same box.
    const int d = static_cast<int>(target.size());
    const int n = d - 1;
    long long total = 0;
    for (long long x : target) total += x;

    std::vector<long long> v(target.size(), 0);
    for (long long layer = 0; layer <= total; ++layer) {
        // enumerate {v <= target, |v| = layer} recursively
        auto emit = [&](auto&& self, int pos, long long remaining) -> void {
            if (pos == d - 1) {
                if (remaining > target[static_cast<std::size_t>(pos)]) return;
                v[static_cast<std::size_t>(pos)] = remaining;
                if (memo_.find(v) == memo_.end()) {
                    Integer acc;
                    if (layer == 0) {
                        acc = 1;
                    } else {
                        long long head = 0;
                        for (int j = 0; j < n; ++j) head += v[static_cast<std::size_t>(j)];
                        if (v[static_cast<std::size_t>(n)] > 0) {
                            --v[static_cast<std::size_t>(n)];
                            acc += Integer(params_.last() + head) * memo_.at(v);
                            ++v[static_cast<std::size_t>(n)];
                        }
                        const long long height = v[static_cast<std::size_t>(n)];
                        for (int j = 0; j < n; ++j) {
                            if (v[static_cast<std::size_t>(j)] == 0) continue;
                            --v[static_cast<std::size_t>(j)];
                            acc += Integer(params_[j] + height) * memo_.at(v);
                            ++v[static_cast<std::size_t>(j)];
                        }
                    }
                    memo_.emplace(v, std::move(acc));
                }
                return;
            }
            long long cap = std::min(remaining, target[static_cast<std::size_t>(pos)]);
            for (long long x = 0; x <= cap; ++x) {
                v[static_cast<std::size_t>(pos)] = x;
                self(self, pos + 1, remaining - x);
            }
        };
        emit(emit, 0, layer);
    }
}

Integer path_count(const ParamVec& params, const MultiIndex& target) {
    PathCountTable table(params);
    return table.count(target);
}

namespace {

// Walk enumeration shared by the single-target and bulk brute forcers.
// Weight is either unsigned long long (guarded by a proven per-path bound)
// or Integer.
template <typename Weight>
void walk_accumulate(const ParamVec& params, int depth, std::vector<Integer>& sums,
                     const std::vector<std::size_t>& strides) {
    const int d = params.dimension();
    const int n = d - 1;
    std::vector<long long> v(static_cast<std::size_t>(d), 0);

    auto dfs = [&](auto&& self, std::size_t idx, long long head, int remaining,
                   const Weight& weight) -> void {
        sums[idx] += weight;
        if (remaining == 0) return;
        const long long height = v[static_cast<std::size_t>(n)];
        for (int j = 0; j < n; ++j) {
            const long long mult = params[j] + height;
            if (mult == 0) continue;
            ++v[static_cast<std::size_t>(j)];
            self(self, idx + strides[static_cast<std::size_t>(j)], head + 1, remaining - 1,
                 Weight(weight * static_cast<unsigned long long>(mult)));
            --v[static_cast<std::size_t>(j)];
        }
        const long long mult = params.last() + head;
        if (mult != 0) {
            ++v[static_cast<std::size_t>(n)];
            self(self, idx + strides[static_cast<std::size_t>(n)], head, remaining - 1,
                 Weight(weight * static_cast<unsigned long long>(mult)));
            --v[static_cast<std::size_t>(n)];
        }
    };
    dfs(dfs, 0, 0, depth, Weight(1));
}

bool fits_u64_weights(const ParamVec& params, int depth) {
    long long cmax = 0;
    for (long long x : params.entries()) cmax = std::max(cmax, x);
    Integer bound = pow_integer(Integer(cmax + depth), static_cast<unsigned>(depth));
    return bound < (Integer(1) << 63);
}

}  // namespace

BruteForceCounts::BruteForceCounts(const ParamVec& params, int depth)
    : dimension_(params.dimension()), depth_(depth) {
    if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
    const auto base = static_cast<std::size_t>(depth) + 1;
    std::size_t size = 1;
    strides_.assign(static_cast<std::size_t>(dimension_), 0);
    for (int j = dimension_ - 1; j >= 0; --j) {
        strides_[static_cast<std::size_t>(j)] = size;
        size *= base;
    }
    sums_.assign(size, Integer(0));
}

const Integer& BruteForceCounts::at(const MultiIndex& target) const {
    if (target.dimension() != dimension_) {
        throw DimensionMismatch("index dimension " + std::to_string(target.dimension()) +
                                " != table dimension " + std::to_string(dimension_));
    }
    if (target.total() > depth_) {
        throw BudgetExceeded("index total " + std::to_string(target.total()) +
                             " exceeds enumerated depth " + std::to_string(depth_));
    }
    std::size_t idx = 0;
    for (int j = 0; j < dimension_; ++j) {
        idx += static_cast<std::size_t>(target[j]) * strides_[static_cast<std::size_t>(j)];
    }
    return sums_[idx];
}

BruteForceCounts enumerate_path_weights(const ParamVec& params, int depth, long long budget) {
    if (depth > budget) {
        throw BudgetExceeded("depth " + std::to_string(depth) + " exceeds enumeration budget " +
                             std::to_string(budget));
    }
    BruteForceCounts out(params, depth);
    if (fits_u64_weights(params, depth)) {
        walk_accumulate<unsigned long long>(params, depth, out.sums_, out.strides_);
    } else {
        walk_accumulate<Integer>(params, depth, out.sums_, out.strides_);
    }
    return out;
}

Integer path_count_bruteforce(const ParamVec& params, const MultiIndex& target, long long budget) {
    require_same_dimension(params, target);
    if (target.total() > budget) {
        throw BudgetExceeded("index total " + std::to_string(target.total()) +
                             " exceeds enumeration budget " + std::to_string(budget));
    }
    // Depth-first over orderings of the remaining step multiset.
    const int d = params.dimension();
    const int n = d - 1;
    std::vector<long long> remaining = target.entries();
    std::vector<long long> v(static_cast<std::size_t>(d), 0);
    Integer total = 0;

    auto dfs = [&](auto&& self, long long head, long long steps_left, const Integer& weight) -> void {
        if (steps_left == 0) {
            total += weight;
            return;
        }
        const long long height = v[static_cast<std::size_t>(n)];
        for (int j = 0; j < n; ++j) {
            if (remaining[static_cast<std::size_t>(j)] == 0) continue;
            const long long mult = params[j] + height;
            if (mult == 0) continue;
            --remaining[static_cast<std::size_t>(j)];
            ++v[static_cast<std::size_t>(j)];
            self(self, head + 1, steps_left - 1, Integer(weight * mult));
            ++remaining[static_cast<std::size_t>(j)];
            --v[static_cast<std::size_t>(j)];
        }
        if (remaining[static_cast<std::size_t>(n)] > 0) {
            const long long mult = params.last() + head;
            if (mult != 0) {
                --remaining[static_cast<std::size_t>(n)];
                ++v[static_cast<std::size_t>(n)];
                self(self, head, steps_left - 1, Integer(weight * mult));
                ++remaining[static_cast<std::size_t>(n)];
                --v[static_cast<std::size_t>(n)];
            }
        }
    };
    dfs(dfs, 0, target.total(), Integer(1));
    return total;
}

std::vector<Rational> ratio_sequence(PathCountTable& table, const std::vector<long long>& prefix,
                                     int max_h) {
    const ParamVec& params = table.params();
    if (static_cast<int>(prefix.size()) != params.n()) {
        throw DimensionMismatch("prefix length " + std::to_string(prefix.size()) +
                                " != parameter dimension - 1 = " + std::to_string(params.n()));
    }
    require_nonnegative(prefix, "prefix");
    if (max_h < 1) throw std::invalid_argument("max_h must be at least 1");
    long long m = 0;
    for (long long x : prefix) m += x;
    const long long base = params.last() + m;
    if (base == 0) {
        throw DegenerateNormalizer("normalizer c_last + sum(prefix) = 0 for c = " + params.str());
    }
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(max_h));
    std::vector<long long> idx = prefix;
    idx.push_back(0);
    Integer denom = 1;
    for (int h = 1; h <= max_h; ++h) {
        idx.back() = h;
        denom *= base;
        out.emplace_back(table.count(MultiIndex(idx)), denom);
    }
    return out;
}

std::vector<Rational> ratio_sequence(const ParamVec& params, const std::vector<long long>& prefix,
                                     int max_h) {
    PathCountTable table(params);
    return ratio_sequence(table, prefix, max_h);
}

}  // namespace pathcount
