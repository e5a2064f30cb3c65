#include "sytdesc/cli.hpp"

#include "sytdesc/enumerate.hpp"
#include "sytdesc/error.hpp"
#include "sytdesc/io.hpp"
#include "sytdesc/partition.hpp"
#include "sytdesc/sample.hpp"
#include "sytdesc/stats.hpp"
#include "sytdesc/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>

namespace sytdesc::cli {

namespace {

std::uint64_t default_guard() {
    if (const char* env = std::getenv("SYTDESC_GUARD")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return v;
    }
    return kDefaultEnumerationGuard;
}

void emit_error(std::ostream& err, std::string_view name, const std::string& message) {
    Json j;
    j["error"] = name;
    j["message"] = message;
    err << j.dump() << '\n';
}

Json descents_json(const DescentSet& d) {
    Json j = Json::array();
    for (int i : d.members())
        j.push_back(i);
    return j;
}

struct Settings {
    std::string shape_text;
    int threads = 0;
    std::uint64_t guard = default_guard();
    std::uint64_t audit_guard = kDefaultAuditGuard;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t count = 1;
    std::uint64_t seed = 0;
    std::uint64_t verify_seed = VerifyOptions{}.seed;
    std::string format;
    std::string f_text = "ones";
    bool brute = false;
    std::string family_text = "two-row";
    int m_from = 1;
    int m_to = 10;
    int max_n = 9;
    std::uint64_t draws = 100000;
};

// Parsed operands; built before any work runs so malformed input is a usage error.
struct Prepared {
    Partition shape;
    FunctionSpec f;
    ShapeFamily family;
};

int do_count(const Prepared& p, std::ostream& out) {
    Json j;
    j["shape"] = to_json(p.shape);
    j["n"] = p.shape.size();
    j["syt_count"] = to_string(count_syt(p.shape));
    out << j.dump() << '\n';
    return kExitOk;
}

int do_enumerate(const Prepared& p, const Settings& s, std::ostream& out) {
    check_guard(p.shape, s.guard);
    std::uint64_t emitted = 0;
    std::uint64_t seen = 0;
    for_each_syt(p.shape, [&](const Tableau& t) {
        if (emitted < s.limit) {
            Json j;
            j["index"] = seen;
            j["tableau"] = to_json(t);
            j["descents"] = descents_json(descent_set(t));
            out << j.dump() << '\n';
            ++emitted;
        }
        ++seen;
        return true;
    });
    Json summary;
    summary["shape"] = to_json(p.shape);
    summary["syt_count"] = std::to_string(seen);
    summary["emitted"] = emitted;
    out << summary.dump() << '\n';
    return kExitOk;
}

int do_sample(const Prepared& p, const Settings& s, std::ostream& out) {
    const auto draws = sample_syt(p.shape, s.count, s.seed, s.threads);
    for (std::size_t i = 0; i < draws.size(); ++i) {
        if (s.format == "text") {
            if (i)
                out << '\n';
            out << to_text(draws[i]);
        } else {
            Json j;
            j["draw"] = i;
            j["tableau"] = to_json(draws[i]);
            out << j.dump() << '\n';
        }
    }
    return kExitOk;
}

int do_audit(const Prepared& p, const Settings& s, std::ostream& out) {
    AuditOptions options;
    options.guard = s.audit_guard;
    options.threads = s.threads;
    const AuditReport r = exhaustive_audit(p.shape, options);
    Json j;
    j["shape"] = to_json(r.shape);
    j["n"] = r.shape.size();
    j["fillings"] = to_string(r.fillings);
    j["syt_count"] = to_string(count_syt(r.shape));
    j["expected"] = to_string(r.expected);
    j["uniform"] = r.uniform;
    Json counts = Json::array();
    for (const auto& [t, c] : r.per_tableau_counts) {
        Json e;
        e["tableau"] = to_json(t);
        e["count"] = to_string(c);
        counts.push_back(std::move(e));
    }
    j["counts"] = std::move(counts);
    out << j.dump() << '\n';
    return kExitOk;
}

int do_stats(const Prepared& p, const Settings& s, std::ostream& out) {
    const DescentFunction f = DescentFunction::build(p.f, p.shape.size());
    const ShapeStats st = shape_stats(p.shape);
    const MomentReport m = normalized_variance(p.shape, f);
    Json j;
    j["shape"] = to_json(p.shape);
    j["n"] = p.shape.size();
    j["f"] = f.name();
    j["syt_count"] = to_string(st.N);
    Json coeff;
    coeff["c_conj"] = to_string(st.c_conj);
    coeff["c_self"] = to_string(st.c_self);
    coeff["d_self"] = to_string(st.d_self);
    coeff["d_conj"] = to_string(st.d_conj);
    coeff["e_self"] = to_string(st.e_self);
    coeff["e_conj"] = to_string(st.e_conj);
    j["coefficients"] = std::move(coeff);
    put_rational(j, "expectation", m.expectation);
    put_rational(j, "variance", m.variance);
    put_rational(j, "normalized_variance", m.normalized_variance, std::nullopt);
    if (s.brute) {
        EnumOptions options;
        options.guard = s.guard;
        options.threads = s.threads;
        const BruteStats b = brute_stats(p.shape, f, options);
        Json bj;
        bj["expectation"] = to_string(b.mean);
        bj["variance"] = to_string(b.variance);
        bj["matches"] = b.mean == m.expectation && b.variance == m.variance;
        j["brute"] = std::move(bj);
    }
    out << j.dump() << '\n';
    return kExitOk;
}

std::string csv_cell(const std::optional<Rational>& v, const char* missing) {
    return v ? to_string(*v) : missing;
}

std::string csv_approx(const std::optional<Rational>& v) {
    if (!v)
        return "";
    Json j = approx(*v);
    return j.dump();
}

int do_bounded(const Prepared& p, const Settings& s, std::ostream& out) {
    int from = s.m_from;
    int to = s.m_to;
    if (p.family.kind == FamilyKind::Explicit) {
        from = 1;
        to = static_cast<int>(p.family.shapes.size());
    }
    const BoundednessReport r = boundedness_scan(p.family, p.f, from, to, s.threads);
    if (s.format == "csv") {
        out << "m,shape,n,lambda1,q,lhs,rhs_unit,min_c,min_c_approx,normalized_variance,"
               "normalized_variance_approx,sup_min_c,sup_normalized_variance\n";
        for (const BoundednessRow& row : r.rows)
            out << row.m << ",\"" << row.shape.to_string() << "\"," << row.n << ','
                << row.first_part << ',' << to_string(row.q) << ',' << to_string(row.lhs) << ','
                << to_string(row.rhs_unit) << ',' << csv_cell(row.min_c, "inf") << ','
                << csv_approx(row.min_c) << ',' << csv_cell(row.normalized_variance, "")
                << ',' << csv_approx(row.normalized_variance) << ','
                << csv_cell(row.sup_min_c, "inf") << ','
                << csv_cell(row.sup_normalized_variance, "") << '\n';
        return kExitOk;
    }
    for (const BoundednessRow& row : r.rows) {
        Json j;
        j["family"] = p.family.name();
        j["f"] = p.f.to_string();
        j["m"] = row.m;
        j["shape"] = to_json(row.shape);
        j["n"] = row.n;
        j["lambda1"] = row.first_part;
        put_rational(j, "q", row.q);
        j["lhs"] = to_string(row.lhs);
        j["rhs_unit"] = to_string(row.rhs_unit);
        put_rational(j, "min_c", row.min_c, "inf");
        put_rational(j, "normalized_variance", row.normalized_variance, std::nullopt);
        put_rational(j, "sup_min_c", row.sup_min_c, "inf");
        put_rational(j, "sup_normalized_variance", row.sup_normalized_variance, std::nullopt);
        out << j.dump() << '\n';
    }
    return kExitOk;
}

int do_verify(const Settings& s, std::ostream& out) {
    VerifyOptions o = verify_options_for_max_n(s.max_n);
    o.threads = s.threads;
    o.seed = s.verify_seed;
    o.sample_draws = s.draws;
    std::size_t failed = 0;
    const auto results = run_verification(o, [&](const CheckResult& r) {
        Json j;
        j["check"] = r.id;
        j["description"] = r.description;
        j["passed"] = r.passed;
        j["detail"] = r.detail;
        out << j.dump() << '\n' << std::flush;
        if (!r.passed)
            ++failed;
    });
    Json summary;
    summary["verify"] = "summary";
    summary["max_n"] = s.max_n;
    summary["passed"] = results.size() - failed;
    summary["failed"] = failed;
    out << summary.dump() << '\n';
    return failed == 0 ? kExitOk : kExitDomainError;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Descent statistics on standard Young tableaux", "sytdesc"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Settings s;
    app.add_option("--threads", s.threads, "Worker cap (0 = all available)")
        ->check(CLI::NonNegativeNumber);

    auto* count = app.add_subcommand("count", "Number of SYT of a shape (hook-length formula)");
    count->add_option("shape", s.shape_text, "Partition, e.g. 4,3,2")->required();

    auto* enumerate = app.add_subcommand("enumerate", "List every SYT of a shape with its descents");
    enumerate->add_option("shape", s.shape_text)->required();
    enumerate->add_option("--limit", s.limit, "Emit at most this many tableaux");
    enumerate->add_option("--guard", s.guard, "Refuse shapes with more tableaux than this");

    auto* sample = app.add_subcommand("sample", "Uniform random SYT via the exchange procedure");
    sample->add_option("shape", s.shape_text)->required();
    sample->add_option("--count", s.count, "Number of draws");
    sample->add_option("--seed", s.seed, "Seed of the draw stream");
    sample->add_option("--format", s.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->default_str("json");

    auto* audit = app.add_subcommand("audit", "Sort all n! fillings and tally the results");
    audit->add_option("shape", s.shape_text)->required();
    audit->add_option("--guard", s.audit_guard, "Refuse shapes with more fillings than this");

    auto* stats = app.add_subcommand("stats", "Closed-form expectation and variance of d_f");
    stats->add_option("shape", s.shape_text)->required();
    stats->add_option("--f", s.f_text, "ones | identity | squares | geometric:R | list:a,b/c,...");
    stats->add_flag("--brute", s.brute, "Also compute the moments by enumeration");
    stats->add_option("--guard", s.guard, "Enumeration guard for --brute");

    auto* bounded = app.add_subcommand("bounded", "Normalized variance and inequality constants along a family");
    bounded->add_option("--family", s.family_text, "two-row | hook | column | list:3,2;4,4");
    bounded->add_option("--f", s.f_text, "Builtin descent function");
    bounded->add_option("--m-from", s.m_from);
    bounded->add_option("--m-to", s.m_to);
    bounded->add_option("--format", s.format, "jsonl or csv")
        ->check(CLI::IsMember({"jsonl", "csv"}))
        ->default_str("jsonl");

    auto* verify = app.add_subcommand("verify", "Run the formula-vs-enumeration oracle suites");
    verify->add_option("--max-n", s.max_n, "Largest n for enumeration-based checks")
        ->check(CLI::Range(0, 14));
    verify->add_option("--seed", s.verify_seed, "Seed for the sampler statistics check");
    verify->add_option("--draws", s.draws, "Draws for the sampler statistics check");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        emit_error(err, "UsageError", e.what());
        return kExitUsage;
    }

    Prepared p;
    try {
        if (!s.shape_text.empty())
            p.shape = parse_partition(s.shape_text);
        p.f = FunctionSpec::parse(s.f_text);
        p.family = ShapeFamily::parse(s.family_text);
        if (bounded->parsed() && p.f.kind == BuiltinKind::List)
            fail(ErrorKind::UnknownBuiltin, "bounded needs a builtin f, not a list");
    } catch (const Error& e) {
        emit_error(err, e.name(), e.what());
        return kExitUsage;
    }

    try {
        if (count->parsed())
            return do_count(p, out);
        if (enumerate->parsed())
            return do_enumerate(p, s, out);
        if (sample->parsed())
            return do_sample(p, s, out);
        if (audit->parsed())
            return do_audit(p, s, out);
        if (stats->parsed())
            return do_stats(p, s, out);
        if (bounded->parsed())
            return do_bounded(p, s, out);
        return do_verify(s, out);
    } catch (const Error& e) {
        emit_error(err, e.name(), e.what());
        return kExitDomainError;
    }
}

} // namespace sytdesc::cli
