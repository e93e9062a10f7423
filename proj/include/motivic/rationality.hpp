#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motivic/errors.hpp"
#include "motivic/zm.hpp"

namespace motivic {

// Window and search bounds for the periodicity analysis. The boundedness
// premise is an explicit input: it is never inferred from the data, only
// supplied by the caller when the geometry guarantees it. growth_constant,
// when set, asserts deg(g_m) >= 2 m C and is verified across the window.
struct AnalysisContext {
    unsigned horizon = 60;
    unsigned p_max = 8;
    unsigned i0_max = 12;
    bool bounded_coefficients = false;
    std::optional<Rat> growth_constant;

    void validate() const;
};

struct DegreeProfile {
    std::vector<std::size_t> degrees;   // degrees[m] = deg(g_m)
    std::vector<Int> per_degree_max;    // per_degree_max[r] = max_m |coeff_r(g_m)|
};

DegreeProfile degree_and_bound_profile(const std::vector<MElement>& g, std::size_t r_max);

// True iff g_{i+2p} g_i == g_{i+p}^2 for every i with i0 < i <= horizon-2p.
// A coefficient sequence with an eventually periodic ratio must pass this
// for the ratio period p; the product form avoids any division.
bool check_periodic_ratio(const std::vector<MElement>& g, unsigned p, unsigned i0,
                          unsigned horizon);

struct RationalityVerdict {
    enum class Kind { RationalConsistent, IrrationalCertificate, Inconclusive };

    Kind kind = Kind::Inconclusive;

    // RationalConsistent: the ratio relation holds at every index in
    // [i0, horizon - 2p]; depth counts the verified indices.
    unsigned p = 0;
    unsigned i0 = 0;
    unsigned depth = 0;

    // IrrationalCertificate: the argument replayed, plus which premises
    // were actually in force.
    std::string reason;
    std::map<std::string, bool> premises;

    std::string diagnostics;
    DegreeProfile profile;
};

// Grid-searches periods p <= p_max. For each p the scan finds the largest
// failing index of the ratio relation; if everything beyond it fits inside
// the i0 budget, the sequence is consistent with a rational form and the
// reported i0 is the first index from which the relation holds onward.
//
// With no period admissible, an irrationality certificate needs all of:
// the caller-supplied boundedness premise, degree records persisting to
// the end of the window, and (when given) the growth bound 2 m C. Any
// rational form would force an eventually periodic ratio h of degree >= 1,
// and the coefficient of the lowest positive degree of h would then grow
// without bound along an arithmetic progression of m, contradicting
// boundedness. Everything else is Inconclusive.
RationalityVerdict analyze(const std::vector<MElement>& g, const AnalysisContext& ctx);

}  // namespace motivic
