#include "oracles.hpp"

#include "sytdesc/enumerate.hpp"
#include "sytdesc/error.hpp"
#include "sytdesc/sample.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <doctest.h>

#include <cmath>
#include <map>

using namespace sytdesc;

TEST_CASE("uniform_below is unbiased on a small range") {
    Rng rng(1);
    std::vector<int> hits(6, 0);
    const int draws = 60000;
    for (int i = 0; i < draws; ++i)
        ++hits[uniform_below(rng, 6)];
    double chi2 = 0;
    for (int h : hits)
        chi2 += (h - 10000.0) * (h - 10000.0) / 10000.0;
    CHECK(chi2 < boost::math::quantile(boost::math::chi_squared(5), 0.999));
    CHECK(uniform_below(rng, 1) == 0);
}

TEST_CASE("random_filling") {
    Rng rng(3);
    CHECK(random_filling(Partition({1}), rng).entries() == std::vector<int>{1});

    Rng a(substream_seed(42, 0)), b(substream_seed(42, 0));
    CHECK(random_filling(Partition({3, 2}), a).entries() ==
          random_filling(Partition({3, 2}), b).entries());
    CHECK(substream_seed(42, 0) != substream_seed(42, 1));
    CHECK(substream_seed(42, 0) != substream_seed(43, 0));

    SUBCASE("all 6 fillings of (2,1) equally likely") {
        Rng rng2(11);
        std::map<std::vector<int>, int> seen;
        const int draws = 60000;
        for (int i = 0; i < draws; ++i)
            ++seen[random_filling(Partition({2, 1}), rng2).entries()];
        REQUIRE(seen.size() == 6);
        double chi2 = 0;
        for (const auto& [k, h] : seen)
            chi2 += (h - 10000.0) * (h - 10000.0) / 10000.0;
        CHECK(chi2 < boost::math::quantile(boost::math::chi_squared(5), 0.999));
    }

    CHECK_THROWS_AS(Filling(Partition({2, 1}), {1, 1, 2}), Error);
    CHECK_THROWS_AS(Filling(Partition({2, 1}), {1, 2}), Error);
}

TEST_CASE("nps_sort") {
    SUBCASE("a tableau is left unchanged, n <= 8") {
        for (int n = 1; n <= 8; ++n)
            for_each_partition(n, [&](const Partition& p) {
                for_each_syt(p, [](const Tableau& t) {
                    REQUIRE(nps_sort(Filling::from_tableau(t)) == t);
                    return true;
                });
            });
    }

    SUBCASE("single row sorts to the identity") {
        const Tableau t = nps_sort(Filling(Partition({3}), {3, 1, 2}));
        CHECK(t.rows() == std::vector<std::vector<int>>{{1, 2, 3}});
    }

    SUBCASE("hand trace on (2,2)") {
        // 4 3 / 2 1. Active (2,2): no neighbours. (1,2): 3 > 1 below, swap.
        // (2,1): 2 < 3 east, stays. (1,1): 4 swaps east with 1, then south with 3.
        const Tableau t = nps_sort(Filling(Partition({2, 2}), {4, 3, 2, 1}));
        CHECK(t.rows() == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
    }

    SUBCASE("output is standard on random fillings up to n = 60") {
        Rng rng(99);
        for (int trial = 0; trial < 300; ++trial) {
            const int n = 1 + static_cast<int>(uniform_below(rng, 60));
            // random partition of n by random cuts
            std::vector<int> parts;
            int left = n;
            while (left > 0) {
                const int cap = parts.empty() ? left : std::min(left, parts.back());
                parts.push_back(1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(cap))));
                left -= parts.back();
            }
            const Partition p(parts);
            CHECK_NOTHROW(nps_sort(random_filling(p, rng)));
        }
    }
}

TEST_CASE("sample_syt") {
    const auto col = sample_syt(Partition({1, 1, 1}), 5, 1);
    REQUIRE(col.size() == 5);
    for (const Tableau& t : col)
        CHECK(t.rows() == std::vector<std::vector<int>>{{1}, {2}, {3}});
    CHECK(sample_syt(Partition({3, 2}), 0, 1).empty());

    SUBCASE("reproducible for any worker count") {
        const auto base = sample_syt(Partition({4, 2, 1}), 500, 2024, 1);
        CHECK(sample_syt(Partition({4, 2, 1}), 500, 2024, 3) == base);
        CHECK(sample_syt(Partition({4, 2, 1}), 500, 2024, 8) == base);
        CHECK(sample_syt(Partition({4, 2, 1}), 500, 2025, 1) != base);
        // prefix property: the first k draws do not depend on the total
        const auto shorter = sample_syt(Partition({4, 2, 1}), 100, 2024, 2);
        CHECK(std::equal(shorter.begin(), shorter.end(), base.begin()));
    }

    SUBCASE("(3,2) frequencies within 3 sigma of 1/5") {
        const std::size_t k = 100000;
        std::map<Tableau, int> seen;
        for (const Tableau& t : sample_syt(Partition({3, 2}), k, 5))
            ++seen[t];
        REQUIRE(seen.size() == 5);
        const double p = 0.2;
        const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(k));
        for (const auto& [t, h] : seen)
            CHECK(std::abs(h / static_cast<double>(k) - p) <= 3 * sigma);
    }
}

TEST_CASE("exhaustive_audit") {
    const AuditReport r21 = exhaustive_audit(Partition({2, 1}));
    CHECK(r21.uniform);
    CHECK(r21.expected == 3);
    REQUIRE(r21.per_tableau_counts.size() == 2);
    CHECK(r21.per_tableau_counts[0].second == 3);
    CHECK(r21.per_tableau_counts[1].second == 3);

    const AuditReport row = exhaustive_audit(Partition({5}));
    REQUIRE(row.per_tableau_counts.size() == 1);
    CHECK(row.per_tableau_counts[0].second == 120);
    CHECK(row.uniform);

    const AuditReport r32 = exhaustive_audit(Partition({3, 2}));
    CHECK(r32.fillings == 120);
    REQUIRE(r32.per_tableau_counts.size() == 5);
    for (const auto& [t, c] : r32.per_tableau_counts)
        CHECK(c == 24);

    const AuditReport empty = exhaustive_audit(Partition());
    CHECK(empty.uniform);

    try {
        exhaustive_audit(Partition({5, 4}));
        FAIL("expected GuardExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::GuardExceeded);
    }

    SUBCASE("parallel and serial audits agree") {
        for (int n = 1; n <= 6; ++n)
            for_each_partition(n, [&](const Partition& p) {
                const AuditReport s = exhaustive_audit_serial(p);
                AuditOptions o;
                o.threads = 3;
                const AuditReport q = exhaustive_audit(p, o);
                REQUIRE(s.per_tableau_counts == q.per_tableau_counts);
                REQUIRE(s.uniform);
            });
    }

    SUBCASE("uniform for every shape up to n = 7") {
        for (int n = 1; n <= 7; ++n)
            for_each_partition(n, [&](const Partition& p) {
                REQUIRE(exhaustive_audit(p).uniform);
            });
    }
}
