#include "sytdesc/stats.hpp"

#include "parallel.hpp"
#include "sytdesc/error.hpp"

#include <algorithm>

namespace sytdesc {

namespace {

// Suffix sums over 1-based parts: nested[k] = sum_{i >= k} w_k(lambda_k) * nested_prev[k].
// Repeated application builds the ordered-index sums without enumerating
// index tuples, so every coefficient is linear in the number of rows.
std::vector<BigCount> suffix_layer(std::span<const int> parts, int shift,
                                   const std::vector<BigCount>& inner) {
    const std::size_t k = parts.size();
    std::vector<BigCount> out(k + 1, 0);
    for (std::size_t idx = k; idx-- > 0;) {
        const long factor = parts[idx] - shift;
        out[idx] = out[idx + 1];
        if (factor > 0)
            out[idx] += factor * inner[idx];
    }
    return out;
}

std::vector<BigCount> ones_layer(std::span<const int> parts) {
    return std::vector<BigCount>(parts.size() + 1, 1);
}

// sum over i_1 >= i_2 >= ... >= i_depth of prod_t (lambda_{i_t} - (t-1)),
// keeping only tuples whose factors are all positive.
BigCount ordered_product_sum(std::span<const int> parts, int depth) {
    std::vector<BigCount> layer = ones_layer(parts);
    for (int t = 0; t < depth; ++t)
        layer = suffix_layer(parts, t, layer);
    // suffix_layer leaves the full sum at index 0
    return parts.empty() ? BigCount(0) : layer[0];
}

Rational normalize(const BigCount& numerator, int n, unsigned depth) {
    if (numerator == 0)
        return 0;
    return ratio(numerator, falling_factorial(static_cast<unsigned>(n), depth));
}

void require_unit_interval(const Rational& value, const char* what, const Partition& shape) {
    if (value < 0 || value > 1)
        fail(ErrorKind::InternalInvariant,
             std::string(what) + " outside [0,1] for shape " + shape.to_string());
}

struct FunctionSums {
    Rational sum;
    Rational sum_sq;
    Rational adjacent; // sum f(i) f(i+1)
    Rational gapped;   // sum over i - j > 1 of f(i) f(j)
};

FunctionSums function_sums(const DescentFunction& f) {
    FunctionSums s;
    s.sum = 0;
    s.sum_sq = 0;
    s.adjacent = 0;
    s.gapped = 0;
    Rational prefix_two_back = 0; // f(1) + ... + f(i-2)
    const int len = f.length();
    for (int i = 1; i <= len; ++i) {
        s.sum += f(i);
        s.sum_sq += f(i) * f(i);
        if (i >= 2)
            s.adjacent += f(i - 1) * f(i);
        if (i >= 3) {
            prefix_two_back += f(i - 2);
            s.gapped += f(i) * prefix_two_back;
        }
    }
    return s;
}

Rational integer_or_throw(const Rational& value, const char* what) {
    if (value.get_den() != 1)
        fail(ErrorKind::InternalInvariant, std::string(what) + " is not an integer");
    return value;
}

} // namespace

Rational coefficient_c_bracket(const Partition& shape) {
    const int n = shape.size();
    if (n < 2)
        return 0;
    BigCount rows = 0;
    BigCount cols = 0;
    for (int p : shape.parts())
        rows += static_cast<long>(p) * (p - 1);
    const Partition conj = conjugate(shape);
    for (int p : conj.parts())
        cols += static_cast<long>(p) * (p - 1);
    const BigCount denom = falling_factorial(static_cast<unsigned>(n), 2);
    return Rational(1, 2) * (Rational(1) + ratio(cols, denom) - ratio(rows, denom));
}

Rational coefficient_c_pair_sum(const Partition& shape) {
    const int n = shape.size();
    if (n < 2)
        return 0;
    const Partition conj = conjugate(shape);
    return normalize(ordered_product_sum(conj.parts(), 2), n, 2);
}

Rational coefficient_c(const Partition& shape) {
    Rational a = coefficient_c_bracket(shape);
    if (a != coefficient_c_pair_sum(shape))
        fail(ErrorKind::InternalInvariant, "forms of c disagree for " + shape.to_string());
    return a;
}

Rational coefficient_d(const Partition& shape) {
    return normalize(ordered_product_sum(shape.parts(), 3), shape.size(), 3);
}

Rational coefficient_e(const Partition& shape) {
    return normalize(ordered_product_sum(shape.parts(), 4), shape.size(), 4);
}

ShapeStats shape_stats(const Partition& shape) {
    const Partition conj = conjugate(shape);
    ShapeStats s;
    s.n = shape.size();
    s.N = count_syt(shape);
    s.c_conj = coefficient_c(shape);
    s.c_self = coefficient_c(conj);
    s.d_self = coefficient_d(shape);
    s.d_conj = coefficient_d(conj);
    s.e_self = coefficient_e(shape);
    s.e_conj = coefficient_e(conj);

    require_unit_interval(s.c_conj, "c_conj", shape);
    require_unit_interval(s.c_self, "c_self", shape);
    require_unit_interval(s.d_self, "d_self", shape);
    require_unit_interval(s.d_conj, "d_conj", shape);
    require_unit_interval(s.e_self, "e_self", shape);
    require_unit_interval(s.e_conj, "e_conj", shape);
    if (s.d_self < s.e_self || s.d_conj < s.e_conj)
        fail(ErrorKind::InternalInvariant, "d < e for shape " + shape.to_string());
    if (shape.size() >= 2 && s.c_self + s.c_conj != 1)
        fail(ErrorKind::InternalInvariant, "c + c' != 1 for shape " + shape.to_string());
    // no pair i - j > 1 exists below n = 4
    if (shape.size() >= 4)
        require_unit_interval(s.gap(), "gap coefficient", shape);
    return s;
}

DescentCountIdentities predicted_descent_counts(const ShapeStats& stats) {
    const Rational N{stats.N};
    DescentCountIdentities out;
    out.at_position = integer_or_throw(N * stats.c_conj, "N c'").get_num();
    out.adjacent = integer_or_throw(N * stats.d_conj, "N d'").get_num();
    out.gap = stats.n >= 4 ? integer_or_throw(N * stats.gap(), "N (c' - d - d' + e + e')").get_num()
                           : BigCount(0);
    return out;
}

DescentCountIdentities predicted_descent_counts(const Partition& shape) {
    return predicted_descent_counts(shape_stats(shape));
}

Rational expectation(const ShapeStats& stats, const DescentFunction& f) {
    return stats.c_conj * function_sums(f).sum;
}

Rational variance(const ShapeStats& stats, const DescentFunction& f) {
    const FunctionSums s = function_sums(f);
    const Rational mean = stats.c_conj * s.sum;
    return stats.c_conj * s.sum_sq + 2 * stats.d_conj * s.adjacent +
           2 * stats.gap() * s.gapped - mean * mean;
}

Rational expectation(const Partition& shape, const DescentFunction& f) {
    f.require_length(shape.size());
    return coefficient_c(shape) * function_sums(f).sum;
}

Rational variance(const Partition& shape, const DescentFunction& f) {
    f.require_length(shape.size());
    return variance(shape_stats(shape), f);
}

MomentReport normalized_variance(const Partition& shape, const DescentFunction& f) {
    f.require_length(shape.size());
    const ShapeStats stats = shape_stats(shape);
    MomentReport r;
    r.expectation = expectation(stats, f);
    r.variance = variance(stats, f);
    if (r.variance < 0)
        fail(ErrorKind::InternalInvariant, "negative variance for " + shape.to_string());
    if (r.expectation != 0)
        r.normalized_variance = r.variance / (r.expectation * r.expectation);
    return r;
}

std::optional<Rational> eq1_min_constant(const Partition& shape, const DescentFunction& f) {
    f.require_length(shape.size());
    f.require_positive();
    const int n = shape.size();
    const int slack = n - shape.part(1);
    if (slack == 0)
        return std::nullopt;
    const FunctionSums s = function_sums(f);
    return Rational(n) * s.sum_sq / (Rational(slack) * s.sum * s.sum);
}

Rational corollary_ratio(const DescentFunction& f) {
    if (f.length() == 0)
        fail(ErrorKind::EmptyDescentFunction, "norm ratio needs n >= 2");
    f.require_positive();
    Rational sum = 0;
    Rational sum_sq = 0;
    for (const Rational& v : f.values()) {
        sum += v;
        sum_sq += v * v;
    }
    return Rational(f.length() + 1) * sum_sq / (sum * sum);
}

ShapeFamily ShapeFamily::parse(std::string_view text) {
    ShapeFamily fam;
    if (text == "two-row") {
        fam.kind = FamilyKind::TwoRow;
    } else if (text == "hook") {
        fam.kind = FamilyKind::Hook;
    } else if (text == "column") {
        fam.kind = FamilyKind::Column;
    } else if (text.starts_with("list:")) {
        fam.kind = FamilyKind::Explicit;
        std::string_view rest = text.substr(5);
        while (true) {
            auto semi = rest.find(';');
            fam.shapes.push_back(parse_partition(rest.substr(0, semi)));
            if (semi == std::string_view::npos)
                break;
            rest.remove_prefix(semi + 1);
        }
    } else {
        fail(ErrorKind::ParseError, "unknown shape family '" + std::string(text) + "'");
    }
    return fam;
}

Partition ShapeFamily::member(int m) const {
    switch (kind) {
    case FamilyKind::TwoRow:
        if (m < 1)
            break;
        return Partition({m, m});
    case FamilyKind::Hook:
        if (m < 2)
            break;
        return Partition({m - 1, 1});
    case FamilyKind::Column:
        if (m < 1)
            break;
        return Partition(std::vector<int>(static_cast<std::size_t>(m), 1));
    case FamilyKind::Explicit:
        if (m < 1 || m > static_cast<int>(shapes.size()))
            break;
        return shapes[static_cast<std::size_t>(m - 1)];
    }
    fail(ErrorKind::ParseError, "family " + name() + " has no member m = " + std::to_string(m));
}

std::string ShapeFamily::name() const {
    switch (kind) {
    case FamilyKind::TwoRow: return "two-row";
    case FamilyKind::Hook: return "hook";
    case FamilyKind::Column: return "column";
    case FamilyKind::Explicit: return "list";
    }
    return "?";
}

BoundednessReport boundedness_scan(const ShapeFamily& family, const FunctionSpec& spec,
                                   int m_first, int m_last, int threads) {
    if (m_last < m_first)
        fail(ErrorKind::ParseError, "empty m range");
    // Resolve every member up front so errors surface before any work.
    std::vector<Partition> shapes;
    for (int m = m_first; m <= m_last; ++m)
        shapes.push_back(family.member(m));

    BoundednessReport report;
    report.rows.resize(shapes.size());
    const int workers = detail::resolve_threads(threads);
    const long count = static_cast<long>(shapes.size());
    std::vector<std::exception_ptr> errors(shapes.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (long idx = 0; idx < count; ++idx) {
        const auto u = static_cast<std::size_t>(idx);
        try {
            const Partition& shape = shapes[u];
            const DescentFunction f = DescentFunction::build(spec, shape.size());
            const FunctionSums s = function_sums(f);
            BoundednessRow& row = report.rows[u];
            row.m = m_first + static_cast<int>(idx);
            row.shape = shape;
            row.n = shape.size();
            row.first_part = shape.part(1);
            row.lhs = Rational(row.n) * s.sum_sq;
            row.rhs_unit = Rational(row.n - row.first_part) * s.sum * s.sum;
            row.min_c = eq1_min_constant(shape, f);
            row.normalized_variance = normalized_variance(shape, f).normalized_variance;
            row.q = ratio(row.first_part, row.n);
        } catch (...) {
            errors[u] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    std::optional<Rational> sup_c = Rational(0);
    std::optional<Rational> sup_v;
    for (BoundednessRow& row : report.rows) {
        if (!row.min_c)
            sup_c.reset();
        else if (sup_c && *row.min_c > *sup_c)
            sup_c = row.min_c;
        if (row.normalized_variance && (!sup_v || *row.normalized_variance > *sup_v))
            sup_v = row.normalized_variance;
        row.sup_min_c = sup_c;
        row.sup_normalized_variance = sup_v;
    }
    return report;
}

} // namespace sytdesc
