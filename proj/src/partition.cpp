#include "sytdesc/partition.hpp"

#include "sytdesc/error.hpp"

#include <charconv>
#include <numeric>

namespace sytdesc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            fail(ErrorKind::NonPositivePart,
                 "part " + std::to_string(i + 1) + " is " + std::to_string(parts_[i]));
        if (i > 0 && parts_[i] > parts_[i - 1])
            fail(ErrorKind::NotNonIncreasing,
                 "part " + std::to_string(i + 1) + " exceeds the part before it");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(n_));
    for (int i = 1; i <= length(); ++i)
        for (int j = 1; j <= part(i); ++j)
            out.push_back({i, j});
    return out;
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

} // namespace

Partition parse_partition(std::string_view text) {
    text = trim(text);
    if (text.empty())
        fail(ErrorKind::ParseError, "empty partition text");
    std::vector<int> parts;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        auto token = trim(text.substr(start, comma == std::string_view::npos ? text.npos
                                                                              : comma - start));
        int value = 0;
        if (!token.empty() && token.front() == '+')
            token.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
            fail(ErrorKind::ParseError, "bad partition part '" + std::string(token) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& shape) {
    std::vector<int> out(static_cast<std::size_t>(shape.part(1)), 0);
    for (int p : shape.parts())
        for (int j = 0; j < p; ++j)
            ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

int hook_length(const Partition& shape, Cell c) {
    if (!shape.contains(c))
        fail(ErrorKind::CellOutsideShape, "cell (" + std::to_string(c.row) + "," +
                                              std::to_string(c.col) + ") is not in shape " +
                                              shape.to_string());
    int leg_end = c.row;
    while (shape.part(leg_end + 1) >= c.col)
        ++leg_end;
    // lambda_i + lambda'_j - i - j + 1
    return shape.part(c.row) + leg_end - c.row - c.col + 1;
}

BigCount count_syt(const Partition& shape) {
    BigCount hooks = 1;
    for (const Cell& c : shape.cells())
        hooks *= hook_length(shape, c);
    BigCount total = factorial(static_cast<unsigned>(shape.size()));
    if (!mpz_divisible_p(total.get_mpz_t(), hooks.get_mpz_t()))
        fail(ErrorKind::InternalInexactDivision, "hook product does not divide n! for shape " +
                                                     shape.to_string());
    BigCount result;
    mpz_divexact(result.get_mpz_t(), total.get_mpz_t(), hooks.get_mpz_t());
    return result;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    const std::function<void(const Partition&)>& visit) {
    if (remaining == 0) {
        visit(Partition(prefix));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(remaining - p, p, prefix, visit);
        prefix.pop_back();
    }
}

} // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
    if (n < 0)
        fail(ErrorKind::ParseError, "negative partition size");
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, visit);
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

} // namespace sytdesc
