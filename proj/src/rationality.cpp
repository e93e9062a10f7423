#include "motivic/rationality.hpp"

#include <algorithm>

namespace motivic {

void AnalysisContext::validate() const {
    if (p_max < 1) throw InvalidInput("analysis needs p_max >= 1");
    if (2ull * p_max + i0_max >= horizon)
        throw InvalidInput("analysis window too small: need 2*p_max + i0_max < horizon (" +
                           std::to_string(2 * p_max + i0_max) + " >= " +
                           std::to_string(horizon) + ")");
    if (growth_constant && *growth_constant <= 0)
        throw InvalidInput("growth constant must be positive");
}

DegreeProfile degree_and_bound_profile(const std::vector<MElement>& g, std::size_t r_max) {
    DegreeProfile profile;
    profile.degrees.reserve(g.size());
    profile.per_degree_max.assign(r_max + 1, Int(0));
    for (const MElement& gm : g) {
        profile.degrees.push_back(gm.degree());
        for (const auto& [r, coeff] : gm.poly().dims()) {
            if (r > r_max) continue;
            Int a = abs(coeff);
            if (a > profile.per_degree_max[r]) profile.per_degree_max[r] = a;
        }
    }
    return profile;
}

namespace {

bool ratio_relation_holds(const std::vector<MElement>& g, unsigned p, unsigned i) {
    return g[i + 2 * p].poly() * g[i].poly() == g[i + p].poly() * g[i + p].poly();
}

}  // namespace

bool check_periodic_ratio(const std::vector<MElement>& g, unsigned p, unsigned i0,
                          unsigned horizon) {
    if (p < 1) throw InvalidInput("period must be positive");
    if (static_cast<std::size_t>(horizon) >= g.size())
        throw InvalidInput("sequence shorter than the horizon");
    if (horizon < static_cast<unsigned long long>(i0) + 2 * p + 1)
        throw HorizonTooSmall("no index in (i0, horizon - 2p] at horizon " +
                              std::to_string(horizon));
    for (unsigned i = i0 + 1; i + 2 * p <= horizon; ++i)
        if (!ratio_relation_holds(g, p, i)) return false;
    return true;
}

RationalityVerdict analyze(const std::vector<MElement>& g, const AnalysisContext& ctx) {
    ctx.validate();
    if (g.size() <= ctx.horizon)
        throw InvalidInput("sequence must reach the analysis horizon");

    RationalityVerdict verdict;
    std::size_t max_degree = 0;
    for (unsigned m = 0; m <= ctx.horizon; ++m)
        max_degree = std::max<std::size_t>(max_degree, g[m].degree());
    verdict.profile = degree_and_bound_profile(
        std::vector<MElement>(g.begin(), g.begin() + ctx.horizon + 1), max_degree);

    for (unsigned p = 1; p <= ctx.p_max; ++p) {
        // Largest failing index decides the stabilization point: the
        // reported i0 is the first index from which the relation holds at
        // every later index, i0 = 0 when it never fails at all.
        long long last_fail = -1;
        for (unsigned i = 0; i + 2 * p <= ctx.horizon; ++i)
            if (!ratio_relation_holds(g, p, i)) last_fail = i;
        unsigned long long i0 = static_cast<unsigned long long>(last_fail + 1);
        if (i0 > ctx.i0_max) continue;
        verdict.kind = RationalityVerdict::Kind::RationalConsistent;
        verdict.p = p;
        verdict.i0 = static_cast<unsigned>(i0);
        verdict.depth = static_cast<unsigned>(ctx.horizon - 2 * p - i0 + 1);
        verdict.diagnostics = "ratio relation verified at " + std::to_string(verdict.depth) +
                              " indices";
        return verdict;
    }

    // Degree records: indices where deg(g_m) exceeds everything before.
    std::size_t running = 0;
    unsigned last_record = 0, records = 0;
    for (unsigned m = 1; m <= ctx.horizon; ++m) {
        if (verdict.profile.degrees[m] > running) {
            running = verdict.profile.degrees[m];
            last_record = m;
            ++records;
        }
    }
    bool unbounded_observed = records >= 3 && last_record + 2ull * ctx.p_max >= ctx.horizon;

    bool growth_verified = true;
    if (ctx.growth_constant) {
        for (unsigned m = 1; m <= ctx.horizon; ++m)
            if (Rat(static_cast<unsigned long>(verdict.profile.degrees[m])) <
                Rat(2 * static_cast<unsigned long>(m)) * *ctx.growth_constant) {
                growth_verified = false;
                break;
            }
    }

    verdict.premises["bounded_coefficients"] = ctx.bounded_coefficients;
    verdict.premises["degrees_unbounded_within_horizon"] = unbounded_observed;
    if (ctx.growth_constant) verdict.premises["growth_bound_2mC"] = growth_verified;

    if (ctx.bounded_coefficients && unbounded_observed && growth_verified) {
        verdict.kind = RationalityVerdict::Kind::IrrationalCertificate;
        verdict.reason =
            "no period p <= " + std::to_string(ctx.p_max) + " with offset i0 <= " +
            std::to_string(ctx.i0_max) + " satisfies the ratio relation at horizon " +
            std::to_string(ctx.horizon) + "; degrees keep setting records through m=" +
            std::to_string(last_record) +
            " while fixed-degree coefficients are bounded by premise, so any eventually "
            "periodic ratio would have degree >= 1 and its lowest positive-degree "
            "coefficient would grow without bound along an arithmetic progression";
        return verdict;
    }

    verdict.kind = RationalityVerdict::Kind::Inconclusive;
    verdict.diagnostics =
        "no (p, i0) with p <= " + std::to_string(ctx.p_max) + ", i0 <= " +
        std::to_string(ctx.i0_max) + " fits; degree records: " + std::to_string(records) +
        " (last at m=" + std::to_string(last_record) + "); premises: bounded_coefficients=" +
        (ctx.bounded_coefficients ? "true" : "false") +
        (ctx.growth_constant
             ? std::string(", growth_bound_2mC=") + (growth_verified ? "true" : "false")
             : std::string());
    return verdict;
}

}  // namespace motivic
