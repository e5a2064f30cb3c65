#include "sytdesc/verify.hpp"

#include "parallel.hpp"
#include "sytdesc/enumerate.hpp"
#include "sytdesc/error.hpp"
#include "sytdesc/partition.hpp"
#include "sytdesc/sample.hpp"
#include "sytdesc/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace sytdesc {

namespace {

// Collects the first failure message; later failures only bump the count.
class Tally {
public:
    explicit Tally(std::string id, std::string description)
        : result_{std::move(id), std::move(description), true, {}} {}

    void expect(bool ok, const std::function<std::string()>& what) {
        ++checked_;
        if (ok)
            return;
        ++failed_;
        if (result_.passed)
            first_failure_ = what();
        result_.passed = false;
    }

    void note(std::string text) { notes_ = std::move(text); }

    CheckResult finish() {
        std::ostringstream s;
        s << checked_ << " checks";
        if (failed_)
            s << ", " << failed_ << " failed; first: " << first_failure_;
        if (!notes_.empty())
            s << "; " << notes_;
        result_.detail = s.str();
        return result_;
    }

private:
    CheckResult result_;
    std::size_t checked_ = 0;
    std::size_t failed_ = 0;
    std::string first_failure_;
    std::string notes_;
};

template <class Body>
CheckResult guarded(const std::string& id, const std::string& description, Body&& body) {
    try {
        return body(Tally(id, description));
    } catch (const Error& e) {
        return {id, description, false, std::string(e.name()) + ": " + e.what()};
    } catch (const std::exception& e) {
        return {id, description, false, e.what()};
    }
}

void for_partitions_up_to(int max_n, int min_n, const std::function<void(const Partition&)>& fn) {
    for (int n = min_n; n <= max_n; ++n)
        for_each_partition(n, fn);
}

EnumOptions enum_options(const VerifyOptions& o) {
    EnumOptions e;
    e.threads = o.threads;
    return e;
}

const std::vector<FunctionSpec>& builtin_families() {
    static const std::vector<FunctionSpec> specs = {
        FunctionSpec::parse("ones"), FunctionSpec::parse("identity"),
        FunctionSpec::parse("squares"), FunctionSpec::parse("geometric:2")};
    return specs;
}

} // namespace

VerifyOptions verify_options_for_max_n(int max_n) {
    VerifyOptions o;
    o.hook_max_n = max_n;
    o.rs_max_n = max_n;
    o.enumeration_max_n = max_n;
    o.audit_max_n = std::min(max_n, 8);
    return o;
}

CheckResult check_hook_counts(const VerifyOptions& o) {
    return guarded("1a", "hook-length count equals enumeration size", [&](Tally t) {
        for_partitions_up_to(o.hook_max_n, 0, [&](const Partition& p) {
            const BigCount N = count_syt(p);
            const DescentProfile prof = descent_profile(p, enum_options(o));
            t.expect(to_big(prof.total) == N, [&] {
                return "shape " + p.to_string() + ": formula " + N.get_str() + " vs enumerated " +
                       std::to_string(prof.total);
            });
        });
        t.note("n <= " + std::to_string(o.hook_max_n));
        return t.finish();
    });
}

CheckResult check_robinson_schensted(const VerifyOptions& o) {
    return guarded("1b", "sum of squared tableau counts equals n!", [&](Tally t) {
        for (int n = 0; n <= o.rs_max_n; ++n) {
            BigCount sum = 0;
            for_each_partition(n, [&](const Partition& p) {
                const BigCount N = count_syt(p);
                sum += N * N;
            });
            t.expect(sum == factorial(static_cast<unsigned>(n)),
                     [&] { return "n = " + std::to_string(n) + ": " + sum.get_str(); });
        }
        t.note("n <= " + std::to_string(o.rs_max_n));
        return t.finish();
    });
}

CheckResult check_moments_against_enumeration(const VerifyOptions& o) {
    return guarded("2", "closed-form E and V equal brute force", [&](Tally t) {
        for_partitions_up_to(o.enumeration_max_n, 0, [&](const Partition& p) {
            const DescentProfile prof = descent_profile(p, enum_options(o));
            const ShapeStats stats = shape_stats(p);
            for (const FunctionSpec& spec : builtin_families()) {
                const DescentFunction f = DescentFunction::build(spec, p.size());
                const BruteStats brute = brute_stats(prof, f);
                const Rational e = expectation(stats, f);
                const Rational v = variance(stats, f);
                t.expect(brute.mean == e && brute.variance == v, [&] {
                    return "shape " + p.to_string() + " f=" + spec.to_string() + ": E " +
                           to_string(e) + " vs " + to_string(brute.mean) + ", V " + to_string(v) +
                           " vs " + to_string(brute.variance);
                });
            }
        });
        t.note("n <= " + std::to_string(o.enumeration_max_n) + ", four builtin f");
        return t.finish();
    });
}

CheckResult check_position_invariance(const VerifyOptions& o) {
    return guarded("3", "descent and co-occurrence counts independent of position",
                   [&](Tally t) {
        for_partitions_up_to(o.enumeration_max_n, 0, [&](const Partition& p) {
            const DescentProfile prof = descent_profile(p, enum_options(o));
            const DescentPositionCounts counts = descent_position_counts(prof);
            const CooccurrenceMatrix pairs = cooccurrence_matrix(prof);
            const int positions = std::max(p.size() - 1, 0);
            auto where = [&](const char* what) {
                return [&p, what] { return std::string(what) + " differ for shape " + p.to_string(); };
            };
            for (int i = 2; i <= positions; ++i)
                t.expect(counts.at(i) == counts.at(1), where("position counts"));
            for (int i = 3; i <= positions; ++i)
                t.expect(pairs.at(i, i - 1) == pairs.at(2, 1), where("adjacent co-occurrences"));
            for (int i = 3; i <= positions; ++i)
                for (int j = 1; j < i - 1; ++j)
                    t.expect(pairs.at(i, j) == pairs.at(3, 1), where("gap co-occurrences"));
        });
        t.note("n <= " + std::to_string(o.enumeration_max_n));
        return t.finish();
    });
}

CheckResult check_count_identities(const VerifyOptions& o) {
    return guarded("4a", "enumerated counts equal N c', N d', N (c' - d - d' + e + e')",
                   [&](Tally t) {
        for_partitions_up_to(o.enumeration_max_n, 0, [&](const Partition& p) {
            const DescentProfile prof = descent_profile(p, enum_options(o));
            const DescentPositionCounts counts = descent_position_counts(prof);
            const CooccurrenceMatrix pairs = cooccurrence_matrix(prof);
            const DescentCountIdentities predicted = predicted_descent_counts(p);
            const int n = p.size();
            if (n >= 2)
                t.expect(counts.at(1) == predicted.at_position,
                         [&] { return "descents at 1 for " + p.to_string(); });
            if (n >= 3)
                t.expect(pairs.at(2, 1) == predicted.adjacent,
                         [&] { return "descents at 1,2 for " + p.to_string(); });
            if (n >= 4)
                t.expect(pairs.at(3, 1) == predicted.gap,
                         [&] { return "descents at 1,3 for " + p.to_string(); });
        });
        t.note("n <= " + std::to_string(o.enumeration_max_n));
        return t.finish();
    });
}

CheckResult check_count_integrality(const VerifyOptions& o) {
    return guarded("4b", "N times each coefficient is an integer", [&](Tally t) {
        for_partitions_up_to(o.coefficient_max_n, 0, [&](const Partition& p) {
            bool ok = true;
            try {
                (void)predicted_descent_counts(p);
            } catch (const Error&) {
                ok = false;
            }
            t.expect(ok, [&] { return "non-integral count for " + p.to_string(); });
        });
        t.note("n <= " + std::to_string(o.coefficient_max_n));
        return t.finish();
    });
}

CheckResult check_prefix_interpretations(const VerifyOptions& o) {
    return guarded("4c", "d and e equal first-row / first-column prefix fractions",
                   [&](Tally t) {
        for_partitions_up_to(o.enumeration_max_n, 0, [&](const Partition& p) {
            const Partition conj = conjugate(p);
            const DescentProfile rows = descent_profile(p, enum_options(o));
            const DescentProfile cols = descent_profile(conj, enum_options(o));
            t.expect(first_row_prefix_fraction(rows, 3) == coefficient_d(p),
                     [&] { return "d for " + p.to_string(); });
            t.expect(first_row_prefix_fraction(rows, 4) == coefficient_e(p),
                     [&] { return "e for " + p.to_string(); });
            t.expect(first_row_prefix_fraction(cols, 3) == coefficient_d(conj),
                     [&] { return "d' for " + p.to_string(); });
            t.expect(first_row_prefix_fraction(cols, 4) == coefficient_e(conj),
                     [&] { return "e' for " + p.to_string(); });
        });
        t.note("n <= " + std::to_string(o.enumeration_max_n));
        return t.finish();
    });
}

CheckResult check_sampler_exactness(const VerifyOptions& o) {
    return guarded("5", "every SYT arises from exactly n!/N fillings", [&](Tally t) {
        AuditOptions a;
        a.threads = o.threads;
        a.guard = factorial(static_cast<unsigned>(std::max(o.audit_max_n, 0))).get_ui();
        std::size_t shapes = 0;
        for_partitions_up_to(o.audit_max_n, 1, [&](const Partition& p) {
            const AuditReport r = exhaustive_audit(p, a);
            ++shapes;
            t.expect(r.uniform, [&] { return "audit not uniform for " + p.to_string(); });
        });
        t.note(std::to_string(shapes) + " shapes, n <= " + std::to_string(o.audit_max_n));
        return t.finish();
    });
}

CheckResult check_sampler_statistics(const VerifyOptions& o) {
    return guarded("6", "sampled frequencies for (4,3,2) within 4 sigma, chi-square below 0.999 quantile",
                   [&](Tally t) {
        const Partition shape({4, 3, 2});
        std::map<Tableau, std::size_t> index;
        for (const Tableau& tab : enumerate_syt(shape))
            index.emplace(tab, index.size());
        std::vector<std::uint64_t> hits(index.size(), 0);
        for (const Tableau& tab : sample_syt(shape, o.sample_draws, o.seed, o.threads))
            ++hits[index.at(tab)];

        const double k = static_cast<double>(o.sample_draws);
        const double p = 1.0 / static_cast<double>(index.size());
        const double sigma = std::sqrt(p * (1 - p) / k);
        double worst = 0;
        double chi2 = 0;
        for (std::uint64_t h : hits) {
            const double freq = static_cast<double>(h) / k;
            worst = std::max(worst, std::abs(freq - p) / sigma);
            t.expect(std::abs(freq - p) <= 4 * sigma,
                     [&] { return "frequency " + std::to_string(freq) + " off by > 4 sigma"; });
            const double expected = k * p;
            chi2 += (static_cast<double>(h) - expected) * (static_cast<double>(h) - expected) / expected;
        }
        const boost::math::chi_squared dist(static_cast<double>(index.size() - 1));
        const double critical = boost::math::quantile(dist, 0.999);
        t.expect(chi2 < critical, [&] {
            return "chi-square " + std::to_string(chi2) + " >= " + std::to_string(critical);
        });
        std::ostringstream s;
        s << "N=" << index.size() << ", draws=" << o.sample_draws << ", max |z|=" << worst
          << ", chi2=" << chi2 << " < " << critical;
        t.note(s.str());
        return t.finish();
    });
}

CheckResult check_two_row_bounded(const VerifyOptions& o) {
    return guarded("7a", "(m,m) with f=ones: V/E^2 non-increasing for m >= 2 and at most 1",
                   [&](Tally t) {
        const BoundednessReport r = boundedness_scan(ShapeFamily::parse("two-row"),
                                                     FunctionSpec::parse("ones"), 2,
                                                     o.two_row_max_m, o.threads);
        std::optional<Rational> prev;
        for (const BoundednessRow& row : r.rows) {
            t.expect(row.normalized_variance.has_value(),
                     [&] { return "E = 0 at m = " + std::to_string(row.m); });
            if (!row.normalized_variance)
                continue;
            t.expect(*row.normalized_variance <= 1,
                     [&] { return "V/E^2 > 1 at m = " + std::to_string(row.m); });
            if (prev)
                t.expect(*row.normalized_variance <= *prev,
                         [&] { return "V/E^2 increased at m = " + std::to_string(row.m); });
            prev = row.normalized_variance;
        }
        if (!r.rows.empty() && r.rows.back().sup_normalized_variance)
            t.note("sup V/E^2 = " + to_string(*r.rows.back().sup_normalized_variance) +
                   ", m <= " + std::to_string(o.two_row_max_m));
        return t.finish();
    });
}

CheckResult check_hook_geometric_growth(const VerifyOptions& o) {
    return guarded("7b", "(m-1,1) with f=geometric(2): min constant and V/E^2 strictly increase, m=10..25",
                   [&](Tally t) {
        const BoundednessReport r = boundedness_scan(
            ShapeFamily::parse("hook"), FunctionSpec::parse("geometric:2"), 10, 25, o.threads);
        for (std::size_t i = 1; i < r.rows.size(); ++i) {
            const auto& a = r.rows[i - 1];
            const auto& b = r.rows[i];
            t.expect(a.min_c && b.min_c && *b.min_c > *a.min_c,
                     [&] { return "min constant not increasing at m = " + std::to_string(b.m); });
            t.expect(a.normalized_variance && b.normalized_variance &&
                         *b.normalized_variance > *a.normalized_variance,
                     [&] { return "V/E^2 not increasing at m = " + std::to_string(b.m); });
        }
        if (!r.rows.empty() && r.rows.back().min_c)
            t.note("at m=25: min c ~ " + std::to_string(approx(*r.rows.back().min_c)) +
                   ", V/E^2 ~ " + std::to_string(approx(*r.rows.back().normalized_variance)));
        return t.finish();
    });
}

CheckResult check_corollary_ratio(const VerifyOptions& o) {
    return guarded("7c", "norm ratio: ones stays <= 2, geometric(2) exceeds 10 by n = 40",
                   [&](Tally t) {
        const FunctionSpec ones = FunctionSpec::parse("ones");
        const long last = o.corollary_max_n;
        std::vector<char> ok(static_cast<std::size_t>(std::max(last + 1, 2L)), 1);
        const int workers = detail::resolve_threads(o.threads);
#pragma omp parallel for schedule(dynamic, 64) num_threads(workers)
        for (long n = 2; n <= last; ++n)
            ok[static_cast<std::size_t>(n)] =
                corollary_ratio(DescentFunction::build(ones, static_cast<int>(n))) <= 2;
        for (long n = 2; n <= last; ++n)
            t.expect(ok[static_cast<std::size_t>(n)] != 0,
                     [&] { return "ones ratio > 2 at n = " + std::to_string(n); });

        int first_over = 0;
        for (int n = 2; n <= 40 && first_over == 0; ++n)
            if (corollary_ratio(builtin_f("geometric", n, 2)) > 10)
                first_over = n;
        t.expect(first_over != 0, [] { return "geometric(2) ratio never exceeded 10"; });
        t.note("ones n <= " + std::to_string(last) + "; geometric(2) exceeds 10 at n = " +
               std::to_string(first_over));
        return t.finish();
    });
}

CheckResult check_coefficient_conjugation(const VerifyOptions& o) {
    return guarded("8a", "c_lambda + c_lambda' = 1 and both forms of c agree", [&](Tally t) {
        for_partitions_up_to(o.coefficient_max_n, 2, [&](const Partition& p) {
            const Partition conj = conjugate(p);
            t.expect(coefficient_c_bracket(p) == coefficient_c_pair_sum(p),
                     [&] { return "c forms disagree for " + p.to_string(); });
            t.expect(coefficient_c(p) + coefficient_c(conj) == 1,
                     [&] { return "c + c' != 1 for " + p.to_string(); });
        });
        t.note("2 <= n <= " + std::to_string(o.coefficient_max_n));
        return t.finish();
    });
}

CheckResult check_descent_complement(const VerifyOptions& o) {
    return guarded("8b", "transposing a tableau complements its descent set", [&](Tally t) {
        for_partitions_up_to(o.enumeration_max_n, 1, [&](const Partition& p) {
            check_guard(p, kDefaultEnumerationGuard);
            for_each_syt(p, [&](const Tableau& tab) {
                t.expect(descent_set(transpose(tab)) == descent_set(tab).complement(),
                         [&] { return "complement fails for a tableau of " + p.to_string(); });
                return true;
            });
        });
        t.note("n <= " + std::to_string(o.enumeration_max_n));
        return t.finish();
    });
}

CheckResult check_reading_word(const VerifyOptions& o) {
    return guarded("rw", "inverse reading word descents equal tableau descents", [&](Tally t) {
        for_partitions_up_to(o.enumeration_max_n, 1, [&](const Partition& p) {
            check_guard(p, kDefaultEnumerationGuard);
            for_each_syt(p, [&](const Tableau& tab) {
                t.expect(word_descents(inverse_reading_word(tab)) == descent_set(tab),
                         [&] { return "word mismatch for a tableau of " + p.to_string(); });
                return true;
            });
        });
        t.note("n <= " + std::to_string(o.enumeration_max_n));
        return t.finish();
    });
}

std::vector<CheckResult> run_verification(const VerifyOptions& o,
                                          const std::function<void(const CheckResult&)>& report) {
    using Check = CheckResult (*)(const VerifyOptions&);
    static constexpr Check checks[] = {
        check_hook_counts,           check_robinson_schensted,   check_moments_against_enumeration,
        check_position_invariance,   check_count_identities,     check_count_integrality,
        check_prefix_interpretations, check_sampler_exactness,   check_sampler_statistics,
        check_two_row_bounded,       check_hook_geometric_growth, check_corollary_ratio,
        check_coefficient_conjugation, check_descent_complement, check_reading_word,
    };
    std::vector<CheckResult> out;
    for (Check c : checks) {
        out.push_back(c(o));
        if (report)
            report(out.back());
    }
    return out;
}

} // namespace sytdesc
