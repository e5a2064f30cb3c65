#pragma once

#include "sytdesc/partition.hpp"
#include "sytdesc/rational.hpp"
#include "sytdesc/tableau.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace sytdesc {

// All sampling uses std::mt19937_64, whose output sequence is fixed by the
// standard. Draw k of a run with seed s uses its own generator seeded with
// substream_seed(s, k), so streams do not depend on scheduling.
using Rng = std::mt19937_64;

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

// Uniform integer in [0, bound) by multiply-and-reject; no modulo bias.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

// An arbitrary bijective filling of a shape with 1..n (no order constraints).
class Filling {
public:
    // Throws ShapeMismatch / DuplicateOrMissingEntry.
    Filling(Partition shape, std::vector<int> row_major);

    static Filling from_tableau(const Tableau& t);

    const Partition& shape() const noexcept { return shape_; }
    // Entries in row-major order.
    const std::vector<int>& entries() const noexcept { return entries_; }
    int at(Cell c) const { return entries_[offset(c)]; }

private:
    std::size_t offset(Cell c) const;

    Partition shape_;
    std::vector<int> entries_;
    std::vector<std::size_t> row_offset_;
};

// Shuffle of 1..n (Fisher-Yates) laid out row-major.
Filling random_filling(const Partition& shape, Rng& rng);

// The exchange procedure: cells become active from the rightmost column
// leftwards, each column bottom to top; an active entry keeps swapping with
// the smaller of its east/south neighbours while that neighbour is smaller.
Tableau nps_sort(const Filling& filling);

// k independent draws, reproducible from seed for any worker count.
std::vector<Tableau> sample_syt(const Partition& shape, std::size_t k, std::uint64_t seed,
                                int threads = 0);

inline constexpr std::uint64_t kDefaultAuditGuard = 40320; // 8!

struct AuditOptions {
    std::uint64_t guard = kDefaultAuditGuard; // max number of fillings
    int threads = 0;
};

struct AuditReport {
    Partition shape;
    // Sorted by tableau.
    std::vector<std::pair<Tableau, BigCount>> per_tableau_counts;
    BigCount fillings;
    BigCount expected; // n! / N
    bool uniform = false;
};

// Runs nps_sort over all n! fillings. Throws GuardExceeded if n! > guard.
AuditReport exhaustive_audit(const Partition& shape, const AuditOptions& options = {});
AuditReport exhaustive_audit_serial(const Partition& shape,
                                    std::uint64_t guard = kDefaultAuditGuard);

} // namespace sytdesc
