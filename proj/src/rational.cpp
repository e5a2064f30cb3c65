#include "sytdesc/rational.hpp"

#include "sytdesc/error.hpp"

#include <cctype>

namespace sytdesc {

std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotNonIncreasing: return "NotNonIncreasing";
    case ErrorKind::NonPositivePart: return "NonPositivePart";
    case ErrorKind::CellOutsideShape: return "CellOutsideShape";
    case ErrorKind::InternalInexactDivision: return "InternalInexactDivision";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::DuplicateOrMissingEntry: return "DuplicateOrMissingEntry";
    case ErrorKind::RowNotIncreasing: return "RowNotIncreasing";
    case ErrorKind::ColumnNotIncreasing: return "ColumnNotIncreasing";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorKind::NonPositiveRatio: return "NonPositiveRatio";
    case ErrorKind::NonPositiveF: return "NonPositiveF";
    case ErrorKind::EmptyDescentFunction: return "EmptyDescentFunction";
    case ErrorKind::GuardExceeded: return "GuardExceeded";
    case ErrorKind::ShapeTooLarge: return "ShapeTooLarge";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
    }
    return "Unknown";
}

std::string to_string(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const BigCount& value) { return value.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            return false;
    return true;
}

BigCount parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return BigCount(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                           : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
        den.front() == '+')
        fail(ErrorKind::ParseError, "not an exact rational: '" + std::string(text) + "'");
    BigCount d = parse_integer(den);
    if (d == 0)
        fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational q(parse_integer(num), d);
    q.canonicalize();
    return q;
}

double approx(const Rational& value) { return value.get_d(); }

BigCount factorial(unsigned n) {
    BigCount r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigCount falling_factorial(unsigned n, unsigned k) {
    BigCount r = 1;
    if (k > n)
        return 0;
    for (unsigned i = 0; i < k; ++i)
        r *= n - i;
    return r;
}

} // namespace sytdesc
