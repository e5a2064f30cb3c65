#pragma once

#include "sytdesc/partition.hpp"
#include "sytdesc/rational.hpp"
#include "sytdesc/tableau.hpp"

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace sytdesc {

inline constexpr std::uint64_t kDefaultEnumerationGuard = 10'000'000;

struct EnumOptions {
    std::uint64_t guard = kDefaultEnumerationGuard;
    int threads = 0; // 0: use all available workers
};

// Throws GuardExceeded when count_syt(shape) > guard.
void check_guard(const Partition& shape, std::uint64_t guard);

// Streams every SYT of the shape exactly once. Values 1..n are placed in
// turn, candidate cells tried top row first. Return false from visit to
// stop early.
void for_each_syt(const Partition& shape, const std::function<bool(const Tableau&)>& visit);

std::vector<Tableau> enumerate_syt(const Partition& shape,
                                   std::uint64_t guard = kDefaultEnumerationGuard);

// Everything the brute-force oracles need, gathered in one pass over SYT(shape).
// Descent sets are bit masks: bit i-1 set iff i is a descent.
struct DescentProfile {
    int n = 0;
    std::uint64_t total = 0;
    // (mask, number of tableaux with exactly that descent set), sorted by mask.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> mask_histogram;
    // first_row_run[L]: tableaux whose values 1..L lie in row 1 but L+1 does not.
    std::vector<std::uint64_t> first_row_run;

    friend bool operator==(const DescentProfile&, const DescentProfile&) = default;
};

// Serial reference kernel.
DescentProfile descent_profile_serial(const Partition& shape,
                                      std::uint64_t guard = kDefaultEnumerationGuard);

// Parallel kernel: the search tree is cut at a shallow depth and the
// subtrees are distributed over workers. Output is identical to the serial
// kernel for any worker count.
DescentProfile descent_profile(const Partition& shape, const EnumOptions& options = {});

// counts[i-1] = #{T : i in D(T)} for i = 1..n-1.
struct DescentPositionCounts {
    std::vector<BigCount> counts;

    const BigCount& at(int i) const { return counts[static_cast<std::size_t>(i - 1)]; }
};

// Number of tableaux with descents at both i and j, 1 <= j < i <= n-1.
class CooccurrenceMatrix {
public:
    CooccurrenceMatrix() = default;
    explicit CooccurrenceMatrix(int positions);

    int positions() const noexcept { return positions_; }
    // Symmetric access; i != j.
    const BigCount& at(int i, int j) const;
    BigCount& at(int i, int j);

private:
    std::size_t index(int i, int j) const;

    int positions_ = 0;
    std::vector<BigCount> pairs_;
};

struct BruteStats {
    Rational mean;
    Rational second_moment;
    Rational variance;
};

DescentPositionCounts descent_position_counts(const DescentProfile& profile);
DescentPositionCounts descent_position_counts(const Partition& shape,
                                              const EnumOptions& options = {});

CooccurrenceMatrix cooccurrence_matrix(const DescentProfile& profile);
CooccurrenceMatrix cooccurrence_matrix(const Partition& shape, const EnumOptions& options = {});

BruteStats brute_stats(const DescentProfile& profile, const DescentFunction& f);
BruteStats brute_stats(const Partition& shape, const DescentFunction& f,
                       const EnumOptions& options = {});

// Fraction of SYT(shape) with 1..m all in the first row.
Rational first_row_prefix_fraction(const DescentProfile& profile, int m);
Rational first_row_prefix_fraction(const Partition& shape, int m,
                                   const EnumOptions& options = {});

} // namespace sytdesc
