#pragma once

#include "sytdesc/partition.hpp"
#include "sytdesc/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sytdesc {

// A standard Young tableau. Construction always validates; once built the
// value is immutable.
class Tableau {
public:
    // Throws ShapeMismatch, DuplicateOrMissingEntry, RowNotIncreasing or
    // ColumnNotIncreasing.
    static Tableau validate(const Partition& shape, std::vector<std::vector<int>> rows);

    // The unique tableau filled 1..n in row-major order.
    static Tableau superstandard_rows(const Partition& shape);

    const Partition& shape() const noexcept { return shape_; }
    int size() const noexcept { return shape_.size(); }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

    int at(Cell c) const {
        return rows_[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)];
    }
    // Cell holding the value v (1 <= v <= n).
    Cell cell_of(int v) const { return position_[static_cast<std::size_t>(v - 1)]; }

    friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }
    friend auto operator<=>(const Tableau& a, const Tableau& b) { return a.rows_ <=> b.rows_; }

private:
    Tableau(Partition shape, std::vector<std::vector<int>> rows);

    Partition shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<Cell> position_;
};

// Sorted subset of {1, ..., n-1}.
class DescentSet {
public:
    DescentSet() = default;
    DescentSet(int n, std::vector<int> members);

    int universe() const noexcept { return n_; }
    const std::vector<int>& members() const noexcept { return members_; }
    bool contains(int i) const;
    std::size_t count() const noexcept { return members_.size(); }
    DescentSet complement() const;

    friend bool operator==(const DescentSet&, const DescentSet&) = default;

private:
    int n_ = 0;
    std::vector<int> members_;
};

// i is a descent when i+1 sits in a strictly lower row than i.
DescentSet descent_set(const Tableau& t);

// Letter p is the label of the cell holding p, cells labelled left to right
// starting from the bottom row.
std::vector<int> inverse_reading_word(const Tableau& t);

// Positions p with word[p] > word[p+1], 1-based.
DescentSet word_descents(std::span<const int> word);

Tableau transpose(const Tableau& t);

enum class BuiltinKind { Ones, Identity, Squares, Geometric, List };

// A reusable recipe for f that can be instantiated for any n. Parsed from
// "ones", "identity", "squares", "geometric:R" or "list:v1,v2,...".
struct FunctionSpec {
    BuiltinKind kind = BuiltinKind::Ones;
    Rational ratio = 1;
    std::vector<Rational> values;

    static FunctionSpec parse(std::string_view text);
    std::string to_string() const;
};

// Values f(1..n-1) used to weight descents.
class DescentFunction {
public:
    DescentFunction() = default;
    explicit DescentFunction(std::vector<Rational> values, std::string name = "list");

    // f of length n-1 (empty when n <= 1). List specs throw LengthMismatch
    // when their length is not n-1.
    static DescentFunction build(const FunctionSpec& spec, int n);

    const std::vector<Rational>& values() const noexcept { return values_; }
    int length() const noexcept { return static_cast<int>(values_.size()); }
    const std::string& name() const noexcept { return name_; }

    // f(i), 1-based.
    const Rational& operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }

    void require_length(int n) const;
    void require_positive() const;

private:
    std::vector<Rational> values_;
    std::string name_ = "list";
};

// name is one of ones/identity/squares/geometric/geometric:R; ratio applies
// to "geometric".
DescentFunction builtin_f(std::string_view name, int n, const Rational& ratio = 2);

Rational descent_function_value(const Tableau& t, const DescentFunction& f);

// Same sum taken over an already computed descent set.
Rational descent_function_value(const DescentSet& d, const DescentFunction& f);

} // namespace sytdesc
