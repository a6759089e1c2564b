#pragma once

#include "pathcount/errors.hpp"
#include "pathcount/rational.hpp"

#include <map>
#include <shared_mutex>
#include <vector>

namespace pathcount {

// Edge-multiplicity parameters (c_1, ..., c_{n+1}) of the counting graph on
// Z_{>=0}^{n+1}: a step in direction j <= n from vertex v has multiplicity
// c_j + v_{n+1}, and a step in the last direction has multiplicity
// c_{n+1} + v_1 + ... + v_n. Entries are nonnegative and the length is at
// least 2 (n >= 1).
class ParamVec {
public:
    explicit ParamVec(std::vector<long long> entries);

    int dimension() const { return static_cast<int>(entries_.size()); }  // n+1
    int n() const { return dimension() - 1; }
    long long operator[](int idx) const { return entries_[static_cast<std::size_t>(idx)]; }
    long long last() const { return entries_.back(); }
    const std::vector<long long>& entries() const { return entries_; }

    bool operator==(const ParamVec&) const = default;

    std::string str() const;

private:
    std::vector<long long> entries_;
};

// Target vertex (i_1, ..., i_{n+1}); nonnegative entries, length validated
// against the ParamVec at the point of use.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<long long> entries);

    int dimension() const { return static_cast<int>(entries_.size()); }
    long long operator[](int idx) const { return entries_[static_cast<std::size_t>(idx)]; }
    long long total() const;
    const std::vector<long long>& entries() const { return entries_; }

    bool operator==(const MultiIndex&) const = default;

    std::string str() const;

private:
    std::vector<long long> entries_;
};

// Memoized weighted path counts A_c(i): A_c(0) = 1, anything with a negative
// coordinate counts 0, and otherwise
//   A_c(i) = (c_{n+1} + i_1 + ... + i_n) * A_c(i - e_{n+1})
//          + sum_j (c_j + i_{n+1}) * A_c(i - e_j).
// Readers proceed concurrently; a miss fills the sub-box below the target
// under an exclusive lock.
class PathCountTable {
public:
    explicit PathCountTable(ParamVec params);

    const ParamVec& params() const { return params_; }
    Integer count(const MultiIndex& target);

private:
    ParamVec params_;
    std::map<std::vector<long long>, Integer> memo_;
    std::shared_mutex mutex_;

    void fill_box(const std::vector<long long>& target);
};

Integer path_count(const ParamVec& params, const MultiIndex& target);

// Independent route: sums, over every ordering of the step multiset, the
// product of edge multiplicities along the walk. Cost grows like
// |i|!/(i_1!...i_{n+1}!); the budget guards the total step count.
Integer path_count_bruteforce(const ParamVec& params, const MultiIndex& target,
                              long long budget = 12);

// Bulk brute force: one walk enumeration covering every endpoint with at
// most `depth` steps. at() addresses results for |i| <= depth.
class BruteForceCounts {
public:
    BruteForceCounts(const ParamVec& params, int depth);

    int depth() const { return depth_; }
    const Integer& at(const MultiIndex& target) const;

private:
    int dimension_;
    int depth_;
    std::vector<Integer> sums_;
    std::vector<std::size_t> strides_;

    friend BruteForceCounts enumerate_path_weights(const ParamVec& params, int depth,
                                                   long long budget);
};

BruteForceCounts enumerate_path_weights(const ParamVec& params, int depth,
                                        long long budget = 12);

// [A_c(prefix, h) / (c_{n+1} + sum(prefix))^h for h = 1..max_h].
// prefix has length n; throws DegenerateNormalizer when the base is zero.
std::vector<Rational> ratio_sequence(PathCountTable& table, const std::vector<long long>& prefix,
                                     int max_h);
std::vector<Rational> ratio_sequence(const ParamVec& params, const std::vector<long long>& prefix,
                                     int max_h);

}  // namespace pathcount
