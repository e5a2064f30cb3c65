#include "sytdesc/sample.hpp"

#include "parallel.hpp"
#include "sytdesc/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace sytdesc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Flat working grid for the exchange procedure; entries stored row-major.
struct Grid {
    std::vector<int> parts;
    std::vector<std::size_t> offset;
    std::vector<int> cell;

    explicit Grid(const Partition& shape) : parts(shape.parts().begin(), shape.parts().end()) {
        std::size_t at = 0;
        for (int p : parts) {
            offset.push_back(at);
            at += static_cast<std::size_t>(p);
        }
        cell.resize(at);
    }

    int& operator()(int r, int c) { return cell[offset[static_cast<std::size_t>(r)] + static_cast<std::size_t>(c)]; }
    int rows() const { return static_cast<int>(parts.size()); }
    int width(int r) const { return r < rows() ? parts[static_cast<std::size_t>(r)] : 0; }
};

// Order in which cells become active, 0-based (row, col).
std::vector<std::pair<int, int>> activation_order(const Partition& shape) {
    std::vector<std::pair<int, int>> order;
    for (int col = shape.part(1) - 1; col >= 0; --col) {
        int height = 0;
        while (height < shape.length() && shape.part(height + 1) > col)
            ++height;
        for (int row = height - 1; row >= 0; --row)
            order.emplace_back(row, col);
    }
    return order;
}

void exchange_sort(Grid& g, const std::vector<std::pair<int, int>>& order) {
    for (auto [r, c] : order) {
        while (true) {
            const int here = g(r, c);
            const bool has_east = c + 1 < g.width(r);
            const bool has_south = c < g.width(r + 1);
            if (!has_east && !has_south)
                break;
            int nr = r, nc = c + 1;
            if (!has_east || (has_south && g(r + 1, c) < g(r, c + 1))) {
                nr = r + 1;
                nc = c;
            }
            if (g(nr, nc) > here)
                break;
            std::swap(g(r, c), g(nr, nc));
            r = nr;
            c = nc;
        }
    }
}

Tableau grid_to_tableau(const Partition& shape, Grid& g) {
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < g.rows(); ++r) {
        rows.emplace_back();
        for (int c = 0; c < g.width(r); ++c)
            rows.back().push_back(g(r, c));
    }
    return Tableau::validate(shape, std::move(rows));
}

// Row-major entries packed four bits each; n <= 16.
std::uint64_t pack(const std::vector<int>& cells) {
    std::uint64_t key = 0;
    for (int v : cells)
        key = key << 4 | static_cast<std::uint64_t>(v - 1);
    return key;
}

std::vector<int> unpack(std::uint64_t key, std::size_t n) {
    std::vector<int> cells(n);
    for (std::size_t i = n; i-- > 0;) {
        cells[i] = static_cast<int>(key & 0xF) + 1;
        key >>= 4;
    }
    return cells;
}

using CountMap = std::unordered_map<std::uint64_t, std::uint64_t>;

// Sorts every filling whose first `fixed` entries match prefix.
void audit_block(const Partition& shape, const std::vector<std::pair<int, int>>& order,
                 std::vector<int> perm, std::size_t fixed, CountMap& counts) {
    Grid g(shape);
    do {
        std::copy(perm.begin(), perm.end(), g.cell.begin());
        exchange_sort(g, order);
        ++counts[pack(g.cell)];
    } while (std::next_permutation(perm.begin() + static_cast<std::ptrdiff_t>(fixed), perm.end()));
}

void check_audit_guard(const Partition& shape, std::uint64_t guard) {
    if (shape.size() > 16 || factorial(static_cast<unsigned>(shape.size())) > to_big(guard))
        fail(ErrorKind::GuardExceeded, "shape " + shape.to_string() + " has " +
                                           std::to_string(shape.size()) +
                                           "! fillings, guard is " + std::to_string(guard));
}

AuditReport build_report(const Partition& shape, const CountMap& counts) {
    AuditReport report;
    report.shape = shape;
    const std::size_t n = static_cast<std::size_t>(shape.size());
    report.fillings = factorial(static_cast<unsigned>(n));
    report.expected = report.fillings / count_syt(shape);
    std::map<std::vector<int>, std::uint64_t> sorted;
    for (const auto& [key, count] : counts)
        sorted[unpack(key, n)] += count;
    BigCount total = 0;
    for (const auto& [cells, count] : sorted) {
        Grid g(shape);
        g.cell = cells;
        report.per_tableau_counts.emplace_back(grid_to_tableau(shape, g), to_big(count));
        total += to_big(count);
    }
    std::sort(report.per_tableau_counts.begin(), report.per_tableau_counts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (total != report.fillings)
        fail(ErrorKind::InternalInvariant, "audit counts do not sum to n!");
    report.uniform = report.per_tableau_counts.size() == count_syt(shape) &&
                     std::all_of(report.per_tableau_counts.begin(),
                                 report.per_tableau_counts.end(),
                                 [&](const auto& e) { return e.second == report.expected; });
    return report;
}

} // namespace

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    // Lemire's nearly divisionless method.
    unsigned __int128 m = static_cast<unsigned __int128>(rng()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<unsigned __int128>(rng()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

Filling::Filling(Partition shape, std::vector<int> row_major)
    : shape_(std::move(shape)), entries_(std::move(row_major)) {
    if (static_cast<int>(entries_.size()) != shape_.size())
        fail(ErrorKind::ShapeMismatch, "filling size does not match shape");
    std::vector<bool> seen(entries_.size() + 1, false);
    for (int v : entries_) {
        if (v < 1 || v > shape_.size() || seen[static_cast<std::size_t>(v)])
            fail(ErrorKind::DuplicateOrMissingEntry, "filling is not a permutation of 1..n");
        seen[static_cast<std::size_t>(v)] = true;
    }
    std::size_t at = 0;
    for (int p : shape_.parts()) {
        row_offset_.push_back(at);
        at += static_cast<std::size_t>(p);
    }
}

Filling Filling::from_tableau(const Tableau& t) {
    std::vector<int> cells;
    for (const auto& row : t.rows())
        cells.insert(cells.end(), row.begin(), row.end());
    return Filling(t.shape(), std::move(cells));
}

std::size_t Filling::offset(Cell c) const {
    if (!shape_.contains(c))
        fail(ErrorKind::CellOutsideShape, "cell outside filling");
    return row_offset_[static_cast<std::size_t>(c.row - 1)] + static_cast<std::size_t>(c.col - 1);
}

Filling random_filling(const Partition& shape, Rng& rng) {
    std::vector<int> cells(static_cast<std::size_t>(shape.size()));
    std::iota(cells.begin(), cells.end(), 1);
    for (std::size_t i = cells.size(); i > 1; --i)
        std::swap(cells[i - 1], cells[uniform_below(rng, i)]);
    return Filling(shape, std::move(cells));
}

Tableau nps_sort(const Filling& filling) {
    Grid g(filling.shape());
    g.cell = filling.entries();
    exchange_sort(g, activation_order(filling.shape()));
    return grid_to_tableau(filling.shape(), g);
}

std::vector<Tableau> sample_syt(const Partition& shape, std::size_t k, std::uint64_t seed,
                                int threads) {
    const int workers = detail::resolve_threads(threads);
    const auto order = activation_order(shape);
    std::vector<std::vector<int>> draws(k);
    const long count = static_cast<long>(k);
#pragma omp parallel for schedule(static) num_threads(workers)
    for (long i = 0; i < count; ++i) {
        Rng rng(substream_seed(seed, static_cast<std::uint64_t>(i)));
        Grid g(shape);
        g.cell = random_filling(shape, rng).entries();
        exchange_sort(g, order);
        draws[static_cast<std::size_t>(i)] = std::move(g.cell);
    }
    std::vector<Tableau> out;
    out.reserve(k);
    for (auto& cells : draws) {
        Grid g(shape);
        g.cell = std::move(cells);
        out.push_back(grid_to_tableau(shape, g));
    }
    return out;
}

AuditReport exhaustive_audit_serial(const Partition& shape, std::uint64_t guard) {
    check_audit_guard(shape, guard);
    std::vector<int> perm(static_cast<std::size_t>(shape.size()));
    std::iota(perm.begin(), perm.end(), 1);
    CountMap counts;
    audit_block(shape, activation_order(shape), perm, 0, counts);
    return build_report(shape, counts);
}

AuditReport exhaustive_audit(const Partition& shape, const AuditOptions& options) {
    check_audit_guard(shape, options.guard);
    const int workers = detail::resolve_threads(options.threads);
    const int n = shape.size();
    const auto order = activation_order(shape);

    // One block per ordered choice of the first two entries.
    std::vector<std::vector<int>> blocks;
    const std::size_t fixed = n >= 2 ? 2 : 0;
    if (fixed == 0) {
        blocks.push_back(std::vector<int>(static_cast<std::size_t>(n), 1));
    } else {
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                if (a == b)
                    continue;
                std::vector<int> perm{a, b};
                for (int v = 1; v <= n; ++v)
                    if (v != a && v != b)
                        perm.push_back(v);
                blocks.push_back(std::move(perm));
            }
    }

    std::vector<CountMap> partial(blocks.size());
    const long tasks = static_cast<long>(blocks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (long t = 0; t < tasks; ++t)
        audit_block(shape, order, blocks[static_cast<std::size_t>(t)], fixed,
                    partial[static_cast<std::size_t>(t)]);

    CountMap counts;
    for (const CountMap& p : partial)
        for (const auto& [key, c] : p)
            counts[key] += c;
    return build_report(shape, counts);
}

} // namespace sytdesc
