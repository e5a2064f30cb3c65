#pragma once

#include "sytdesc/rational.hpp"

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sytdesc {

// 1-based cell coordinates, English orientation (row 1 on top).
struct Cell {
    int row = 1;
    int col = 1;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// An integer partition (the shape of a Ferrers diagram). Parts are stored
// non-increasing and strictly positive; the default value is the empty shape.
class Partition {
public:
    Partition() = default;

    // Throws NotNonIncreasing / NonPositivePart.
    explicit Partition(std::vector<int> parts);

    std::span<const int> parts() const noexcept { return parts_; }
    int size() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    // lambda_i for 1-based i; zero past the last row.
    int part(int i) const noexcept {
        return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    bool contains(Cell c) const noexcept {
        return c.row >= 1 && c.col >= 1 && c.col <= part(c.row);
    }

    // Cells in row-major order.
    std::vector<Cell> cells() const;

    // "4,3,2"; the empty shape prints as "".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// Comma-separated parts, e.g. "4,3,2". Whitespace around parts is ignored.
Partition parse_partition(std::string_view text);

Partition conjugate(const Partition& shape);

// lambda_i + lambda'_j - i - j + 1 for c = (i, j). Throws CellOutsideShape.
int hook_length(const Partition& shape, Cell c);

// Number of standard Young tableaux of the shape, n! / prod(hooks).
BigCount count_syt(const Partition& shape);

// Calls visit for every partition of n in reverse-lexicographic order;
// n = 0 yields the empty shape once.
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);
std::vector<Partition> partitions_of(int n);

} // namespace sytdesc
