#include "oracles.hpp"

#include "sytdesc/error.hpp"
#include "sytdesc/partition.hpp"

#include <doctest.h>

#include <map>

using namespace sytdesc;

namespace {

ErrorKind error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InternalInvariant;
}

} // namespace

TEST_CASE("parse_partition") {
    const Partition p = parse_partition("4,3,2");
    CHECK(p.parts().size() == 3);
    CHECK(p.part(1) == 4);
    CHECK(p.part(3) == 2);
    CHECK(p.size() == 9);
    CHECK(parse_partition("1").size() == 1);
    CHECK(parse_partition("3,3,2,1") == Partition({3, 3, 2, 1}));
    CHECK(parse_partition(" 3, 2 ") == Partition({3, 2}));

    CHECK(error_of([] { parse_partition("2,3"); }) == ErrorKind::NotNonIncreasing);
    CHECK(error_of([] { parse_partition("3,0"); }) == ErrorKind::NonPositivePart);
    CHECK(error_of([] { parse_partition("3,-1"); }) == ErrorKind::NonPositivePart);
    CHECK(error_of([] { parse_partition(""); }) == ErrorKind::ParseError);
    CHECK(error_of([] { parse_partition("3,x"); }) == ErrorKind::ParseError);
    CHECK(error_of([] { parse_partition("3,,1"); }) == ErrorKind::ParseError);
}

TEST_CASE("empty shape") {
    const Partition e;
    CHECK(e.size() == 0);
    CHECK(e.empty());
    CHECK(count_syt(e) == 1);
    CHECK(conjugate(e) == e);
    CHECK(e.cells().empty());
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition({4, 3, 2})) == Partition({3, 3, 2, 1}));
    CHECK(conjugate(Partition({1})) == Partition({1}));
    CHECK(conjugate(Partition({5})) == Partition({1, 1, 1, 1, 1}));

    SUBCASE("involution and size for n <= 30") {
        for (int n = 0; n <= 30; ++n)
            for_each_partition(n, [&](const Partition& p) {
                const Partition c = conjugate(p);
                REQUIRE(c.size() == p.size());
                REQUIRE(conjugate(c) == p);
            });
    }
}

TEST_CASE("hook_length") {
    const Partition p({4, 3, 2});
    CHECK(hook_length(p, {1, 1}) == 6);
    CHECK(hook_length(p, {3, 2}) == 1);
    CHECK(hook_length(Partition({1}), {1, 1}) == 1);
    CHECK(error_of([&] { hook_length(p, {3, 3}); }) == ErrorKind::CellOutsideShape);
    CHECK(error_of([&] { hook_length(p, {0, 1}); }) == ErrorKind::CellOutsideShape);

    SUBCASE("matches a direct cell walk") {
        for (int n = 1; n <= 12; ++n)
            for_each_partition(n, [&](const Partition& q) {
                for (const Cell& c : q.cells())
                    REQUIRE(hook_length(q, c) == oracle::hook_by_walk(q, c.row, c.col));
            });
    }

    SUBCASE("conjugate-indexed factor over the conjugate's cells gives the same multiset") {
        // lambda'_i + lambda_j - i - j + 1 taken over (i, j) in lambda' is the
        // hook of (i, j) in lambda'; its multiset equals the hooks of lambda.
        for (int n = 1; n <= 12; ++n)
            for_each_partition(n, [&](const Partition& q) {
                const Partition c = conjugate(q);
                std::map<int, int> standard, written;
                for (const Cell& cell : q.cells())
                    ++standard[hook_length(q, cell)];
                for (const Cell& cell : c.cells())
                    ++written[c.part(cell.row) + q.part(cell.col) - cell.row - cell.col + 1];
                REQUIRE(standard == written);
            });
    }

    SUBCASE("the same factor over lambda's own cells is not a hook product") {
        // shape (2): factors 2 and -1
        const Partition row({2});
        const Partition c = conjugate(row);
        long product = 1;
        for (const Cell& cell : row.cells())
            product *= c.part(cell.row) + row.part(cell.col) - cell.row - cell.col + 1;
        CHECK(product == -2);
    }
}

TEST_CASE("count_syt") {
    CHECK(count_syt(Partition({1})) == 1);
    CHECK(count_syt(Partition({2, 1})) == 2);
    CHECK(count_syt(Partition({4, 3, 2})) == 168);
    CHECK(count_syt(Partition({3, 2})) == 5);
    // three-row rectangles (m,m,m), counted by a lattice-path recursion
    const char* three_rows[] = {"1", "5", "42", "462", "6006", "87516", "1385670", "23371634",
                                "414315330", "7646001090"};
    for (int m = 1; m <= 10; ++m)
        CHECK(count_syt(Partition({m, m, m})).get_str() == three_rows[m - 1]);

    SUBCASE("against filtering all fillings, n <= 8") {
        for (int n = 1; n <= 8; ++n)
            for_each_partition(n, [&](const Partition& q) {
                REQUIRE(count_syt(q) == oracle::all_syt_by_filtering(q).size());
            });
    }

    SUBCASE("conjugation symmetric, n <= 12") {
        for (int n = 0; n <= 12; ++n)
            for_each_partition(n, [&](const Partition& q) {
                REQUIRE(count_syt(q) == count_syt(conjugate(q)));
            });
    }

    SUBCASE("large shapes do not overflow") {
        // (15,15): Catalan(15) = 9694845
        CHECK(count_syt(Partition({15, 15})) == 9694845);
        const Partition big(std::vector<int>(8, 8));
        CHECK(count_syt(big) > BigCount("1000000000000000000000"));
    }
}

TEST_CASE("partitions_of") {
    const auto three = partitions_of(3);
    REQUIRE(three.size() == 3);
    CHECK(three[0] == Partition({3}));
    CHECK(three[1] == Partition({2, 1}));
    CHECK(three[2] == Partition({1, 1, 1}));

    const auto zero = partitions_of(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());

    CHECK(partitions_of(5).size() == 7);
    // p(n) for n = 10, 20, 30
    CHECK(partitions_of(10).size() == 42);
    CHECK(partitions_of(20).size() == 627);
    CHECK(partitions_of(30).size() == 5604);

    SUBCASE("strictly decreasing order, all distinct") {
        const auto ps = partitions_of(12);
        for (std::size_t i = 1; i < ps.size(); ++i)
            REQUIRE(ps[i - 1] > ps[i]);
    }
}
