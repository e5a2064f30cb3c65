#pragma once

#include "sytdesc/partition.hpp"
#include "sytdesc/rational.hpp"
#include "sytdesc/tableau.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace sytdesc {

// Probability that a fixed position i is a descent of a uniform SYT of the
// given shape, i.e. c_{lambda'}. Zero for n < 2.
Rational coefficient_c(const Partition& shape);

// The two closed forms of c_{lambda'}; coefficient_c checks they agree.
Rational coefficient_c_bracket(const Partition& shape);
Rational coefficient_c_pair_sum(const Partition& shape);

// d_lambda: sum over i >= j >= k with lambda_k >= 3 of
// lambda_i (lambda_j - 1)(lambda_k - 2) / (n (n-1)(n-2)).
Rational coefficient_d(const Partition& shape);

// e_lambda: the four-index analogue, restricted to lambda_l >= 4.
Rational coefficient_e(const Partition& shape);

struct ShapeStats {
    int n = 0;
    BigCount N;
    Rational c_conj; // c_{lambda'}
    Rational c_self; // c_lambda
    Rational d_self;
    Rational d_conj;
    Rational e_self;
    Rational e_conj;

    // Probability of descents at both i and j for i - j > 1; meaningful for
    // n >= 4 only (it multiplies an empty sum otherwise).
    Rational gap() const { return c_conj - d_self - d_conj + e_self + e_conj; }
};

// Throws InternalInvariant if a coefficient leaves [0, 1], d < e,
// c_self + c_conj != 1 for n >= 2, or the gap coefficient leaves [0, 1]
// for n >= 4.
ShapeStats shape_stats(const Partition& shape);

// Exact tableau counts implied by the closed forms: descents at a given i,
// descents at i and i+1, descents at i and j with i - j > 1. Counts for
// position patterns that do not fit in 1..n-1 are zero. Throws
// InternalInvariant if any product N * coefficient is not an integer.
struct DescentCountIdentities {
    BigCount at_position;
    BigCount adjacent;
    BigCount gap;
};
DescentCountIdentities predicted_descent_counts(const ShapeStats& stats);
DescentCountIdentities predicted_descent_counts(const Partition& shape);

// Throw LengthMismatch unless f has n-1 values.
Rational expectation(const Partition& shape, const DescentFunction& f);
Rational variance(const Partition& shape, const DescentFunction& f);

// Same, for a precomputed coefficient bundle.
Rational expectation(const ShapeStats& stats, const DescentFunction& f);
Rational variance(const ShapeStats& stats, const DescentFunction& f);

struct MomentReport {
    Rational expectation;
    Rational variance;
    // V / E^2; empty when E = 0.
    std::optional<Rational> normalized_variance;
};

MomentReport normalized_variance(const Partition& shape, const DescentFunction& f);

// Least c with n sum f^2 <= c (n - lambda_1)(sum f)^2. Empty means
// infinity (lambda_1 = n). Throws NonPositiveF / LengthMismatch.
std::optional<Rational> eq1_min_constant(const Partition& shape, const DescentFunction& f);

// n sum f^2 / (sum f)^2 with n = length + 1. Throws NonPositiveF,
// EmptyDescentFunction.
Rational corollary_ratio(const DescentFunction& f);

enum class FamilyKind { TwoRow, Hook, Column, Explicit };

// two-row(m) = (m, m); hook(m) = (m-1, 1); column(m) = (1^m); explicit(m) is
// the m-th listed shape (1-based).
struct ShapeFamily {
    FamilyKind kind = FamilyKind::TwoRow;
    std::vector<Partition> shapes;

    // "two-row", "hook", "column", or "list:3,2;4,4,1".
    static ShapeFamily parse(std::string_view text);
    Partition member(int m) const;
    std::string name() const;
};

struct BoundednessRow {
    int m = 0;
    Partition shape;
    int n = 0;
    int first_part = 0;
    Rational lhs;      // n sum f^2
    Rational rhs_unit; // (n - lambda_1)(sum f)^2
    std::optional<Rational> min_c;               // empty: infinity
    std::optional<Rational> normalized_variance; // empty: E = 0
    Rational q;                                  // lambda_1 / n
    std::optional<Rational> sup_min_c;           // running; empty: infinity
    std::optional<Rational> sup_normalized_variance;
};

struct BoundednessReport {
    std::vector<BoundednessRow> rows;
};

// Rows for m_first..m_last, evaluated in parallel and collected in order.
BoundednessReport boundedness_scan(const ShapeFamily& family, const FunctionSpec& f,
                                   int m_first, int m_last, int threads = 0);

} // namespace sytdesc
