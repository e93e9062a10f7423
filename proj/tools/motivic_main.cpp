#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "motivic/json_io.hpp"
#include "motivic/selftest.hpp"

using namespace motivic;

namespace {

// JSON reports go to stdout so pipelines can parse them; the one-line human
// summary goes to stderr.  With --json-out the roles swap: the report goes
// to the file and the summary to stdout.
int emit(const Json& report, const std::string& json_out, const std::string& summary) {
    if (json_out.empty()) {
        if (!summary.empty()) std::cerr << summary << "\n";
        std::cout << report.dump(2) << "\n";
    } else {
        std::ofstream out(json_out);
        if (!out) throw InvalidInput("cannot write output file " + json_out);
        out << report.dump(2) << "\n";
        if (!summary.empty()) std::cout << summary << "\n";
    }
    return 0;
}

Rat parse_rat(const std::string& text) {
    try {
        Rat v(text);
        v.canonicalize();
        if (v <= 0) throw InvalidInput("growth constant must be positive");
        return v;
    } catch (const std::invalid_argument&) {
        throw InvalidInput("growth constant must be a rational like 3 or 5/2, got \"" +
                           text + "\"");
    }
}

Json config_json(const AnalysisContext& ctx) {
    Json out;
    out["horizon"] = ctx.horizon;
    out["p_max"] = ctx.p_max;
    out["i0_max"] = ctx.i0_max;
    out["bounded_coefficients"] = ctx.bounded_coefficients;
    if (ctx.growth_constant)
        out["growth_constant"] = ctx.growth_constant->get_str();
    return out;
}

std::string verdict_summary(const RationalityVerdict& v, const AnalysisContext& ctx) {
    std::ostringstream os;
    switch (v.kind) {
        case RationalityVerdict::Kind::RationalConsistent:
            os << "verdict: consistent with a rational form at period p=" << v.p
               << " from index i0=" << v.i0 << " (" << v.depth
               << " consecutive indices verified within horizon " << ctx.horizon
               << "; a deeper horizon could still refute)";
            break;
        case RationalityVerdict::Kind::IrrationalCertificate: {
            os << "verdict: irrationality certificate under premises:";
            bool first = true;
            for (const auto& [name, held] : v.premises) {
                if (!held) continue;
                os << (first ? " " : ", ") << name;
                first = false;
            }
            break;
        }
        case RationalityVerdict::Kind::Inconclusive:
            os << "verdict: inconclusive";
            if (!v.diagnostics.empty()) os << " (" << v.diagnostics << ")";
            break;
    }
    return os.str();
}

struct AnalysisFlags {
    AnalysisContext ctx;
    std::string growth;
    std::string json_out;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--horizon", ctx.horizon, "series horizon (number of coefficients minus one)");
        cmd->add_option("--p-max", ctx.p_max, "largest ratio period to try");
        cmd->add_option("--i0-max", ctx.i0_max, "largest stabilization offset to accept");
        cmd->add_flag("--bounded-coefficients", ctx.bounded_coefficients,
                      "assert the bounded-coefficients premise (required for certificates)");
        cmd->add_option("--growth-constant", growth,
                        "rational C: additionally verify deg(g_m) >= 2mC");
        cmd->add_option("--json-out", json_out, "write the JSON report to this file");
    }

    AnalysisContext finalize() {
        if (!growth.empty()) ctx.growth_constant = parse_rat(growth);
        ctx.validate();
        return ctx;
    }
};

int run_zeta_mu1(const std::string& input, AnalysisFlags& flags) {
    AnalysisContext ctx = flags.finalize();
    HodgeData h = parse_hodge(load_json_file(input));
    auto sequence = mu1_sym_sequence(h, ctx.horizon);
    auto verdict = analyze(sequence, ctx);

    Json report;
    report["command"] = "zeta-mu1";
    report["input"] = hodge_to_json(h);
    report["config"] = config_json(ctx);
    Json seq = Json::array();
    for (const auto& m : sequence) seq.push_back(melement_to_json(m));
    report["sequence"] = seq;
    report["verdict"] = verdict_to_json(verdict);
    return emit(report, flags.json_out, verdict_summary(verdict, ctx));
}

int run_analyze(const std::string& input, AnalysisFlags& flags, bool horizon_given) {
    auto sequence = parse_sequence(load_json_file(input));
    if (!horizon_given) {
        if (sequence.size() < 2) throw InvalidInput("sequence needs at least 2 entries");
        flags.ctx.horizon = static_cast<unsigned>(sequence.size()) - 1;
    }
    AnalysisContext ctx = flags.finalize();
    if (sequence.size() <= ctx.horizon)
        throw InvalidInput("sequence has " + std::to_string(sequence.size()) +
                           " entries but horizon " + std::to_string(ctx.horizon) +
                           " needs " + std::to_string(ctx.horizon + 1));
    auto verdict = analyze(sequence, ctx);

    Json report;
    report["command"] = "analyze";
    report["config"] = config_json(ctx);
    report["length"] = sequence.size();
    report["verdict"] = verdict_to_json(verdict);
    return emit(report, flags.json_out, verdict_summary(verdict, ctx));
}

int run_sb(unsigned index, unsigned horizon, const std::string& json_out) {
    if (index == 0) throw InvalidInput("--index must be >= 1");
    if (horizon < 2 * index)
        throw InvalidInput("closed-form check needs --horizon >= 2*index");
    auto zeta = severi_brauer_zeta(index, horizon);
    bool verified = verify_sb_closed_form(index, horizon);

    Json report;
    report["command"] = "sb-zeta";
    report["index"] = index;
    report["config"] = Json{{"horizon", horizon}};
    report["series"] = k0_series_to_json(zeta);
    report["verified"] = verified;

    std::ostringstream summary;
    if (verified)
        summary << "Severi-Brauer index " << index
                << ": zeta equals its degree-" << (index - 1)
                << " polynomial over (1 - t^" << index << ") through t^" << horizon;
    else
        summary << "Severi-Brauer index " << index << ": closed-form check FAILED";
    emit(report, json_out, summary.str());
    return verified ? 0 : 1;
}

int run_k0(const std::string& manifest_path, unsigned horizon, bool horizon_given,
           const std::string& json_out) {
    auto manifest = parse_manifest(load_json_file(manifest_path));
    if (!manifest.zeta_of)
        throw InvalidInput("field zeta_of is required to compute a zeta series");
    unsigned h = horizon_given ? horizon : manifest.horizon.value_or(12);

    auto zeta = kapranov_zeta(*manifest.zeta_of, manifest.rules, h);

    Json report;
    report["command"] = "k0-zeta";
    report["config"] = Json{{"horizon", h}, {"q", int_to_json(manifest.q)}};
    report["zeta_of"] = k0_to_json(*manifest.zeta_of);
    report["series"] = k0_series_to_json(zeta);

    // Grounding pass: the zeta coefficients, specialized to point counts,
    // must match the exponential of the count sequence.  Symbols without
    // declared counts make the pass impossible, which is a skip, not a
    // failure.
    std::string check = "passed";
    std::string check_detail;
    bool failed = false;
    try {
        std::map<std::string, Int> assignment;
        for (const auto& [name, seq] : manifest.counts) {
            if (seq.empty()) continue;
            assignment[name] = seq[0];
        }
        unsigned depth = h;
        for (const auto& [name, seq] : manifest.counts)
            depth = std::min(depth, static_cast<unsigned>(seq.size()));
        auto counts = counting_sequence(*manifest.zeta_of, manifest.counts, manifest.q, depth);
        auto expected = exp_from_log_counts(counts, depth);
        for (unsigned n = 0; n <= depth; ++n) {
            Int got = counting_specialize(zeta.coeff(n), assignment, manifest.q);
            if (got != expected.coeff(n)) {
                check = "failed";
                check_detail = "coefficient of t^" + std::to_string(n) +
                               " specializes to " + to_decimal(got) + ", counts say " +
                               to_decimal(expected.coeff(n));
                failed = true;
                break;
            }
        }
        if (!failed && depth < h)
            check_detail = "verified through t^" + std::to_string(depth) +
                           " (count data ends there)";
    } catch (const UnassignedSymbol& e) {
        check = "skipped";
        check_detail = e.what();
    } catch (const NonIntegralCoefficient& e) {
        check = "failed";
        check_detail = std::string("count data is not realizable: ") + e.what();
        failed = true;
    }
    report["counting_check"] = Json{{"status", check}, {"detail", check_detail}};

    std::ostringstream summary;
    summary << "zeta series through t^" << h << "; counting cross-check " << check;
    if (!check_detail.empty()) summary << " (" << check_detail << ")";
    emit(report, json_out, summary.str());
    return failed ? 1 : 0;
}

int run_selftest_cmd(const SelftestLimits& limits, const std::string& json_out) {
    limits.validate();
    auto results = run_selftest(limits);

    unsigned passed = 0, failed = 0, skipped = 0;
    std::ostringstream table;
    table << std::left << std::setw(26) << "suite" << std::setw(8) << "status"
          << "detail\n";
    for (const auto& r : results) {
        const char* status = "pass";
        if (r.status == SuiteResult::Status::Fail) status = "FAIL";
        if (r.status == SuiteResult::Status::Skip) status = "skip";
        table << std::left << std::setw(26) << r.name << std::setw(8) << status
              << r.detail << "\n";
        if (r.status == SuiteResult::Status::Pass) ++passed;
        if (r.status == SuiteResult::Status::Fail) ++failed;
        if (r.status == SuiteResult::Status::Skip) ++skipped;
    }
    table << results.size() << " suites: " << passed << " passed, " << failed
          << " failed, " << skipped << " skipped";
    std::cout << table.str() << "\n";

    if (!json_out.empty()) {
        Json report;
        report["command"] = "selftest";
        report["limits"] = Json{{"horizon", limits.horizon},
                                {"pairs", limits.pairs},
                                {"oracle_dim", limits.oracle_dim},
                                {"oracle_m", limits.oracle_m},
                                {"seed", limits.seed}};
        Json suites = Json::array();
        for (const auto& r : results) {
            const char* status = r.status == SuiteResult::Status::Pass   ? "pass"
                                 : r.status == SuiteResult::Status::Fail ? "fail"
                                                                         : "skip";
            suites.push_back(Json{{"name", r.name}, {"status", status}, {"detail", r.detail}});
        }
        report["suites"] = suites;
        report["passed"] = failed == 0;
        std::ofstream out(json_out);
        if (!out) throw InvalidInput("cannot write output file " + json_out);
        out << report.dump(2) << "\n";
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Kapranov zeta series, motivic measures, and rationality certificates"};
    app.require_subcommand(1);

    int rc = 0;

    auto* zeta_cmd = app.add_subcommand(
        "zeta-mu1", "zeta coefficients of a variety under the degree-one measure, with analysis");
    std::string zeta_input;
    AnalysisFlags zeta_flags;
    zeta_cmd->add_option("--input", zeta_input, "variety JSON file")->required();
    zeta_flags.add_to(zeta_cmd);
    zeta_cmd->callback([&] { rc = run_zeta_mu1(zeta_input, zeta_flags); });

    auto* analyze_cmd =
        app.add_subcommand("analyze", "rationality analysis of a raw coefficient sequence");
    std::string analyze_input;
    AnalysisFlags analyze_flags;
    analyze_cmd->add_option("--input", analyze_input, "sequence JSON file")->required();
    analyze_flags.add_to(analyze_cmd);
    analyze_cmd->callback([&] {
        rc = run_analyze(analyze_input, analyze_flags,
                         analyze_cmd->count("--horizon") > 0);
    });

    auto* sb_cmd = app.add_subcommand(
        "sb-zeta", "Severi-Brauer zeta series in the quotient by (L), with closed-form check");
    unsigned sb_index = 2;
    unsigned sb_horizon = 60;
    std::string sb_json_out;
    sb_cmd->add_option("--index", sb_index, "index d of the Severi-Brauer variety")->required();
    sb_cmd->add_option("--horizon", sb_horizon, "series horizon (>= 2*index)");
    sb_cmd->add_option("--json-out", sb_json_out, "write the JSON report to this file");
    sb_cmd->callback([&] { rc = run_sb(sb_index, sb_horizon, sb_json_out); });

    auto* k0_cmd = app.add_subcommand(
        "k0-zeta", "zeta series of a manifest-defined symbolic class, with counting cross-check");
    std::string k0_manifest;
    unsigned k0_horizon = 12;
    std::string k0_json_out;
    k0_cmd->add_option("--manifest", k0_manifest, "manifest JSON file")->required();
    k0_cmd->add_option("--horizon", k0_horizon, "series horizon (overrides the manifest)");
    k0_cmd->add_option("--json-out", k0_json_out, "write the JSON report to this file");
    k0_cmd->callback([&] {
        rc = run_k0(k0_manifest, k0_horizon, k0_cmd->count("--horizon") > 0, k0_json_out);
    });

    auto* self_cmd =
        app.add_subcommand("selftest", "run every oracle-equivalence and invariant suite");
    SelftestLimits limits;
    std::string self_json_out;
    self_cmd->add_option("--pairs", limits.pairs, "randomized trials per suite");
    self_cmd->add_option("--horizon", limits.horizon, "series horizon for the property suites");
    self_cmd->add_option("--oracle-dim", limits.oracle_dim,
                         "total dimension budget for the trace-oracle sweep");
    self_cmd->add_option("--oracle-m", limits.oracle_m, "largest m for the trace-oracle sweep");
    self_cmd->add_option("--seed", limits.seed, "seed for the deterministic generators");
    self_cmd->add_option("--json-out", self_json_out, "write the JSON report to this file");
    self_cmd->callback([&] { rc = run_selftest_cmd(limits, self_json_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
