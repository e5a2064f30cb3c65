#include "sytdesc/enumerate.hpp"

#include "parallel.hpp"
#include "sytdesc/error.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace sytdesc {

void check_guard(const Partition& shape, std::uint64_t guard) {
    BigCount n = count_syt(shape);
    if (n > to_big(guard))
        fail(ErrorKind::GuardExceeded, "shape " + shape.to_string() + " has " + n.get_str() +
                                           " tableaux, guard is " + std::to_string(guard));
}

namespace {

bool can_place(const std::vector<int>& fill, const Partition& shape, std::size_t r) {
    return fill[r] < shape.parts()[r] && (r == 0 || fill[r - 1] > fill[r]);
}

bool syt_rec(const Partition& shape, int v, std::vector<int>& fill,
             std::vector<std::vector<int>>& rows,
             const std::function<bool(const Tableau&)>& visit) {
    if (v > shape.size())
        return visit(Tableau::validate(shape, rows));
    for (std::size_t r = 0; r < fill.size(); ++r) {
        if (!can_place(fill, shape, r))
            continue;
        ++fill[r];
        rows[r].push_back(v);
        bool keep_going = syt_rec(shape, v + 1, fill, rows, visit);
        rows[r].pop_back();
        --fill[r];
        if (!keep_going)
            return false;
    }
    return true;
}

// Search state of the profile kernel after placing values 1..placed.
struct Node {
    std::vector<int> fill;
    int placed = 0;
    int last_row = -1;
    std::uint64_t mask = 0;
    int run = 0; // leading values that are all in row 1
};

struct Accumulator {
    std::uint64_t total = 0;
    std::unordered_map<std::uint64_t, std::uint64_t> masks;
    std::vector<std::uint64_t> runs;

    explicit Accumulator(int n) : runs(static_cast<std::size_t>(n) + 1, 0) {}

    void merge(const Accumulator& other) {
        total += other.total;
        for (const auto& [mask, count] : other.masks)
            masks[mask] += count;
        for (std::size_t i = 0; i < runs.size(); ++i)
            runs[i] += other.runs[i];
    }
};

Node child(const Node& node, std::size_t r) {
    Node next = node;
    ++next.fill[r];
    const int row = static_cast<int>(r);
    if (next.placed > 0 && row > node.last_row)
        next.mask |= std::uint64_t{1} << (next.placed - 1);
    if (row == 0 && node.run == node.placed)
        ++next.run;
    next.last_row = row;
    ++next.placed;
    return next;
}

void profile_rec(const Partition& shape, Node& node, Accumulator& acc) {
    if (node.placed == shape.size()) {
        ++acc.total;
        ++acc.masks[node.mask];
        ++acc.runs[static_cast<std::size_t>(node.run)];
        return;
    }
    const std::size_t rows = node.fill.size();
    for (std::size_t r = 0; r < rows; ++r) {
        if (!can_place(node.fill, shape, r))
            continue;
        const int saved_last = node.last_row;
        const std::uint64_t saved_mask = node.mask;
        const int saved_run = node.run;
        const int row = static_cast<int>(r);
        if (node.placed > 0 && row > node.last_row)
            node.mask |= std::uint64_t{1} << (node.placed - 1);
        if (row == 0 && node.run == node.placed)
            ++node.run;
        node.last_row = row;
        ++node.fill[r];
        ++node.placed;
        profile_rec(shape, node, acc);
        --node.placed;
        --node.fill[r];
        node.last_row = saved_last;
        node.mask = saved_mask;
        node.run = saved_run;
    }
}

Node root(const Partition& shape) {
    Node node;
    node.fill.assign(static_cast<std::size_t>(shape.length()), 0);
    return node;
}

void require_mask_width(const Partition& shape) {
    if (shape.size() > 64)
        fail(ErrorKind::ShapeTooLarge, "descent masks support n <= 64");
}

DescentProfile finish(const Partition& shape, const Accumulator& acc) {
    DescentProfile out;
    out.n = shape.size();
    out.total = acc.total;
    std::map<std::uint64_t, std::uint64_t> sorted(acc.masks.begin(), acc.masks.end());
    out.mask_histogram.assign(sorted.begin(), sorted.end());
    out.first_row_run = acc.runs;
    return out;
}

} // namespace

void for_each_syt(const Partition& shape, const std::function<bool(const Tableau&)>& visit) {
    std::vector<int> fill(static_cast<std::size_t>(shape.length()), 0);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
    syt_rec(shape, 1, fill, rows, visit);
}

std::vector<Tableau> enumerate_syt(const Partition& shape, std::uint64_t guard) {
    check_guard(shape, guard);
    std::vector<Tableau> out;
    for_each_syt(shape, [&](const Tableau& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

DescentProfile descent_profile_serial(const Partition& shape, std::uint64_t guard) {
    check_guard(shape, guard);
    require_mask_width(shape);
    Accumulator acc(shape.size());
    Node node = root(shape);
    profile_rec(shape, node, acc);
    return finish(shape, acc);
}

DescentProfile descent_profile(const Partition& shape, const EnumOptions& options) {
    check_guard(shape, options.guard);
    require_mask_width(shape);
    const int threads = detail::resolve_threads(options.threads);

    // Expand the tree breadth-first until there is enough work to share.
    const std::size_t target = static_cast<std::size_t>(threads) * 16;
    std::vector<Node> frontier{root(shape)};
    while (frontier.size() < target && frontier.front().placed < shape.size()) {
        std::vector<Node> next;
        for (const Node& node : frontier)
            for (std::size_t r = 0; r < node.fill.size(); ++r)
                if (can_place(node.fill, shape, r))
                    next.push_back(child(node, r));
        frontier = std::move(next);
    }

    std::vector<Accumulator> partial(frontier.size(), Accumulator(shape.size()));
    const long tasks = static_cast<long>(frontier.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long t = 0; t < tasks; ++t)
        profile_rec(shape, frontier[static_cast<std::size_t>(t)],
                    partial[static_cast<std::size_t>(t)]);

    Accumulator acc(shape.size());
    for (const Accumulator& p : partial)
        acc.merge(p);
    return finish(shape, acc);
}

CooccurrenceMatrix::CooccurrenceMatrix(int positions)
    : positions_(positions),
      pairs_(positions > 1 ? static_cast<std::size_t>(positions) * (positions - 1) / 2 : 0) {}

std::size_t CooccurrenceMatrix::index(int i, int j) const {
    if (i < j)
        std::swap(i, j);
    if (j < 1 || i > positions_ || i == j)
        fail(ErrorKind::InternalInvariant, "co-occurrence index out of range");
    // row i holds j = 1..i-1
    return static_cast<std::size_t>((i - 1) * (i - 2) / 2 + (j - 1));
}

const BigCount& CooccurrenceMatrix::at(int i, int j) const { return pairs_[index(i, j)]; }
BigCount& CooccurrenceMatrix::at(int i, int j) { return pairs_[index(i, j)]; }

DescentPositionCounts descent_position_counts(const DescentProfile& profile) {
    const int positions = std::max(profile.n - 1, 0);
    std::vector<std::uint64_t> raw(static_cast<std::size_t>(positions), 0);
    for (const auto& [mask, count] : profile.mask_histogram)
        for (int i = 0; i < positions; ++i)
            if (mask >> i & 1U)
                raw[static_cast<std::size_t>(i)] += count;
    DescentPositionCounts out;
    for (std::uint64_t c : raw)
        out.counts.push_back(to_big(c));
    return out;
}

DescentPositionCounts descent_position_counts(const Partition& shape,
                                              const EnumOptions& options) {
    return descent_position_counts(descent_profile(shape, options));
}

CooccurrenceMatrix cooccurrence_matrix(const DescentProfile& profile) {
    const int positions = std::max(profile.n - 1, 0);
    CooccurrenceMatrix out(positions);
    std::vector<std::uint64_t> raw(static_cast<std::size_t>(positions) * positions, 0);
    for (const auto& [mask, count] : profile.mask_histogram)
        for (int i = 1; i < positions; ++i) {
            if (!(mask >> i & 1U))
                continue;
            for (int j = 0; j < i; ++j)
                if (mask >> j & 1U)
                    raw[static_cast<std::size_t>(i * positions + j)] += count;
        }
    for (int i = 2; i <= positions; ++i)
        for (int j = 1; j < i; ++j)
            out.at(i, j) =
                to_big(raw[static_cast<std::size_t>((i - 1) * positions + j - 1)]);
    return out;
}

CooccurrenceMatrix cooccurrence_matrix(const Partition& shape, const EnumOptions& options) {
    return cooccurrence_matrix(descent_profile(shape, options));
}

BruteStats brute_stats(const DescentProfile& profile, const DescentFunction& f) {
    f.require_length(profile.n);
    Rational sum = 0;
    Rational sum_sq = 0;
    for (const auto& [mask, count] : profile.mask_histogram) {
        Rational value = 0;
        for (int i = 1; i <= f.length(); ++i)
            if (mask >> (i - 1) & 1U)
                value += f(i);
        const Rational weight{to_big(count)};
        sum += weight * value;
        sum_sq += weight * value * value;
    }
    const Rational total{to_big(profile.total)};
    BruteStats out;
    out.mean = sum / total;
    out.second_moment = sum_sq / total;
    out.variance = out.second_moment - out.mean * out.mean;
    return out;
}

BruteStats brute_stats(const Partition& shape, const DescentFunction& f,
                       const EnumOptions& options) {
    f.require_length(shape.size());
    return brute_stats(descent_profile(shape, options), f);
}

Rational first_row_prefix_fraction(const DescentProfile& profile, int m) {
    if (m < 0)
        fail(ErrorKind::InternalInvariant, "prefix length must be non-negative");
    std::uint64_t hits = 0;
    for (std::size_t run = static_cast<std::size_t>(m); run < profile.first_row_run.size(); ++run)
        hits += profile.first_row_run[run];
    return ratio(to_big(hits), to_big(profile.total));
}

Rational first_row_prefix_fraction(const Partition& shape, int m, const EnumOptions& options) {
    return first_row_prefix_fraction(descent_profile(shape, options), m);
}

} // namespace sytdesc
