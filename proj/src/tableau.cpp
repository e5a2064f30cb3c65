#include "sytdesc/tableau.hpp"

#include "sytdesc/error.hpp"

#include <algorithm>
#include <cassert>

namespace sytdesc {

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)),
      position_(static_cast<std::size_t>(shape_.size())) {
    for (int i = 1; i <= shape_.length(); ++i)
        for (int j = 1; j <= shape_.part(i); ++j)
            position_[static_cast<std::size_t>(at({i, j}) - 1)] = {i, j};
}

Tableau Tableau::validate(const Partition& shape, std::vector<std::vector<int>> rows) {
    if (static_cast<int>(rows.size()) != shape.length())
        fail(ErrorKind::ShapeMismatch, "expected " + std::to_string(shape.length()) +
                                           " rows, got " + std::to_string(rows.size()));
    for (int i = 1; i <= shape.length(); ++i)
        if (static_cast<int>(rows[static_cast<std::size_t>(i - 1)].size()) != shape.part(i))
            fail(ErrorKind::ShapeMismatch, "row " + std::to_string(i) + " has the wrong length");

    const int n = shape.size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const auto& row : rows)
        for (int v : row) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
                fail(ErrorKind::DuplicateOrMissingEntry,
                     "entry " + std::to_string(v) + " is out of range or repeated");
            seen[static_cast<std::size_t>(v)] = true;
        }

    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j > 0 && rows[i][j - 1] >= rows[i][j])
                fail(ErrorKind::RowNotIncreasing, "row " + std::to_string(i + 1) +
                                                      " is not increasing");
            if (i > 0 && rows[i - 1][j] >= rows[i][j])
                fail(ErrorKind::ColumnNotIncreasing, "column " + std::to_string(j + 1) +
                                                         " is not increasing");
        }
    return Tableau(shape, std::move(rows));
}

Tableau Tableau::superstandard_rows(const Partition& shape) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int p : shape.parts()) {
        rows.emplace_back();
        for (int j = 0; j < p; ++j)
            rows.back().push_back(next++);
    }
    return Tableau(shape, std::move(rows));
}

DescentSet::DescentSet(int n, std::vector<int> members) : n_(n), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && (members_.front() < 1 || members_.back() > n - 1))
        fail(ErrorKind::InternalInvariant, "descent outside 1..n-1");
}

bool DescentSet::contains(int i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
}

DescentSet DescentSet::complement() const {
    std::vector<int> out;
    for (int i = 1; i < n_; ++i)
        if (!contains(i))
            out.push_back(i);
    return DescentSet(n_, std::move(out));
}

DescentSet descent_set(const Tableau& t) {
    std::vector<int> out;
    for (int i = 1; i < t.size(); ++i) {
        Cell a = t.cell_of(i);
        Cell b = t.cell_of(i + 1);
        if (b.row > a.row) {
            assert(b.col <= a.col);
            out.push_back(i);
        }
    }
    return DescentSet(t.size(), std::move(out));
}

std::vector<int> inverse_reading_word(const Tableau& t) {
    const Partition& shape = t.shape();
    // label of the first cell of each row
    std::vector<int> row_start(static_cast<std::size_t>(shape.length()) + 2, 0);
    int label = 1;
    for (int i = shape.length(); i >= 1; --i) {
        row_start[static_cast<std::size_t>(i)] = label;
        label += shape.part(i);
    }
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(t.size()));
    for (int v = 1; v <= t.size(); ++v) {
        Cell c = t.cell_of(v);
        word.push_back(row_start[static_cast<std::size_t>(c.row)] + c.col - 1);
    }
    return word;
}

DescentSet word_descents(std::span<const int> word) {
    std::vector<int> out;
    for (std::size_t p = 0; p + 1 < word.size(); ++p)
        if (word[p] > word[p + 1])
            out.push_back(static_cast<int>(p) + 1);
    return DescentSet(static_cast<int>(word.size()), std::move(out));
}

Tableau transpose(const Tableau& t) {
    Partition conj = conjugate(t.shape());
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= conj.length(); ++i) {
        rows.emplace_back();
        for (int j = 1; j <= conj.part(i); ++j)
            rows.back().push_back(t.at({j, i}));
    }
    return Tableau::validate(conj, std::move(rows));
}

// --- descent functions ---

FunctionSpec FunctionSpec::parse(std::string_view text) {
    FunctionSpec spec;
    if (text == "ones") {
        spec.kind = BuiltinKind::Ones;
    } else if (text == "identity") {
        spec.kind = BuiltinKind::Identity;
    } else if (text == "squares") {
        spec.kind = BuiltinKind::Squares;
    } else if (text == "geometric" || text.starts_with("geometric:")) {
        spec.kind = BuiltinKind::Geometric;
        spec.ratio = text == "geometric" ? Rational(2) : parse_rational(text.substr(10));
        if (spec.ratio <= 0)
            fail(ErrorKind::NonPositiveRatio, "geometric ratio must be positive");
    } else if (text.starts_with("list:")) {
        spec.kind = BuiltinKind::List;
        std::string_view rest = text.substr(5);
        while (!rest.empty()) {
            auto comma = rest.find(',');
            spec.values.push_back(parse_rational(rest.substr(0, comma)));
            if (comma == std::string_view::npos)
                break;
            rest.remove_prefix(comma + 1);
            if (rest.empty())
                fail(ErrorKind::ParseError, "trailing comma in list");
        }
    } else {
        fail(ErrorKind::UnknownBuiltin, "unknown descent function '" + std::string(text) + "'");
    }
    return spec;
}

std::string FunctionSpec::to_string() const {
    switch (kind) {
    case BuiltinKind::Ones: return "ones";
    case BuiltinKind::Identity: return "identity";
    case BuiltinKind::Squares: return "squares";
    case BuiltinKind::Geometric: {
        std::string r = ratio.get_den() == 1 ? ratio.get_num().get_str() : ratio.get_str();
        return "geometric:" + r;
    }
    case BuiltinKind::List: {
        std::string s = "list:";
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i)
                s += ',';
            s += values[i].get_str();
        }
        return s;
    }
    }
    return "?";
}

DescentFunction::DescentFunction(std::vector<Rational> values, std::string name)
    : values_(std::move(values)), name_(std::move(name)) {}

DescentFunction DescentFunction::build(const FunctionSpec& spec, int n) {
    const int len = std::max(n - 1, 0);
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(len));
    switch (spec.kind) {
    case BuiltinKind::Ones:
        v.assign(static_cast<std::size_t>(len), Rational(1));
        break;
    case BuiltinKind::Identity:
        for (int i = 1; i <= len; ++i)
            v.emplace_back(i);
        break;
    case BuiltinKind::Squares:
        for (int i = 1; i <= len; ++i)
            v.emplace_back(static_cast<long>(i) * i);
        break;
    case BuiltinKind::Geometric: {
        if (spec.ratio <= 0)
            fail(ErrorKind::NonPositiveRatio, "geometric ratio must be positive");
        Rational power = spec.ratio;
        for (int i = 1; i <= len; ++i) {
            v.push_back(power);
            power *= spec.ratio;
        }
        break;
    }
    case BuiltinKind::List:
        if (static_cast<int>(spec.values.size()) != len)
            fail(ErrorKind::LengthMismatch, "list has " + std::to_string(spec.values.size()) +
                                                " values but n-1 = " + std::to_string(len));
        v = spec.values;
        break;
    }
    return DescentFunction(std::move(v), spec.to_string());
}

void DescentFunction::require_length(int n) const {
    if (length() != std::max(n - 1, 0))
        fail(ErrorKind::LengthMismatch, "descent function has length " +
                                            std::to_string(length()) + ", shape needs " +
                                            std::to_string(std::max(n - 1, 0)));
}

void DescentFunction::require_positive() const {
    for (int i = 1; i <= length(); ++i)
        if ((*this)(i) <= 0)
            fail(ErrorKind::NonPositiveF, "f(" + std::to_string(i) + ") is not positive");
}

DescentFunction builtin_f(std::string_view name, int n, const Rational& ratio) {
    FunctionSpec spec;
    if (name == "geometric") {
        spec.kind = BuiltinKind::Geometric;
        spec.ratio = ratio;
        if (ratio <= 0)
            fail(ErrorKind::NonPositiveRatio, "geometric ratio must be positive");
    } else if (name.starts_with("list:")) {
        fail(ErrorKind::UnknownBuiltin, "list is not a builtin");
    } else {
        spec = FunctionSpec::parse(name);
    }
    return DescentFunction::build(spec, n);
}

Rational descent_function_value(const DescentSet& d, const DescentFunction& f) {
    f.require_length(d.universe());
    Rational sum = 0;
    for (int i : d.members())
        sum += f(i);
    return sum;
}

Rational descent_function_value(const Tableau& t, const DescentFunction& f) {
    return descent_function_value(descent_set(t), f);
}

} // namespace sytdesc
