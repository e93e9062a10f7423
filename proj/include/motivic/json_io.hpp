#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "motivic/graded.hpp"
#include "motivic/k0.hpp"
#include "motivic/measures.hpp"
#include "motivic/rationality.hpp"
#include "motivic/zm.hpp"

namespace motivic {

/// JSON conventions used throughout: integers are written as decimal strings
/// so arbitrary-precision values survive the trip, and readers accept plain
/// JSON integers too.  All parse errors are InvalidInput naming the field.
using Json = nlohmann::json;

Json int_to_json(const Int& v);
Int json_to_int(const Json& j, const std::string& field);

/// Dense coefficient list, low degree first: 1 + 2s^2 is ["1", "0", "2"].
Json graded_to_json(const GradedElement& x);
GradedElement json_to_graded(const Json& j, const std::string& field);

Json melement_to_json(const MElement& x);
MElement json_to_melement(const Json& j, const std::string& field);

/// {"sequence": [poly, poly, ...]} or a bare array of polynomials.
std::vector<MElement> parse_sequence(const Json& j);

/// {"name": ..., "dim": n, "h0": [...], "plurigenera": {"n": P_n, ...}}.
/// name and plurigenera are optional.
HodgeData parse_hodge(const Json& j);
Json hodge_to_json(const HodgeData& h);

/// Term list, each term {"symbol": [names] or name, "lpow": a, "coeff": c};
/// lpow defaults to 0 and coeff to 1.
Json k0_to_json(const K0Expr& x);
K0Expr json_to_k0(const Json& j, const std::string& field);

Json k0_series_to_json(const TruncatedSeries<K0Expr>& s);

/// Everything a symbolic zeta run needs, ingested in one file:
/// {"symbols": [...], "sym_rules": {name: rule}, "counts": {name: [N...]},
///  "q": q, "zeta_of": expr, "horizon": n}.  A rule is either
/// {"kind": "periodic", "period": d} or {"kind": "table", "values":
/// {"2": expr, ...}}.  When "symbols" is present it must cover every name
/// used elsewhere in the manifest.
struct K0Manifest {
    std::vector<std::string> symbols;
    SymRuleSet rules;
    std::map<std::string, std::vector<Int>> counts;
    Int q = 2;
    std::optional<K0Expr> zeta_of;
    std::optional<unsigned> horizon;
};

K0Manifest parse_manifest(const Json& j);

Json verdict_to_json(const RationalityVerdict& v);
Json profile_to_json(const DegreeProfile& p);

/// Reads and parses a file, naming it in any error.
Json load_json_file(const std::string& path);

}  // namespace motivic
