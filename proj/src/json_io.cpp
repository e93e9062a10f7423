#include "motivic/json_io.hpp"

#include <fstream>

namespace motivic {

namespace {

bool looks_like_decimal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = s[0] == '-' ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

unsigned json_to_unsigned(const Json& j, const std::string& field) {
    Int v = json_to_int(j, field);
    if (v < 0 || !v.fits_uint_p())
        throw InvalidInput("field " + field + " must be a small nonnegative integer");
    return static_cast<unsigned>(v.get_ui());
}

unsigned parse_unsigned_key(const std::string& key, const std::string& field) {
    if (!looks_like_decimal(key) || key[0] == '-')
        throw InvalidInput("field " + field + " has non-numeric key \"" + key + "\"");
    Int v(key);
    if (!v.fits_uint_p())
        throw InvalidInput("field " + field + " has oversized key \"" + key + "\"");
    return static_cast<unsigned>(v.get_ui());
}

}  // namespace

Json int_to_json(const Int& v) { return to_decimal(v); }

Int json_to_int(const Json& j, const std::string& field) {
    if (j.is_number_unsigned()) return Int(std::to_string(j.get<unsigned long long>()));
    if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (!looks_like_decimal(s))
            throw InvalidInput("field " + field + " is not a decimal integer: \"" + s + "\"");
        return Int(s);
    }
    throw InvalidInput("field " + field + " must be an integer or a decimal string");
}

Json graded_to_json(const GradedElement& x) {
    Json out = Json::array();
    for (const auto& c : x.dense()) out.push_back(int_to_json(c));
    return out;
}

GradedElement json_to_graded(const Json& j, const std::string& field) {
    if (!j.is_array())
        throw InvalidInput("field " + field + " must be a coefficient array");
    std::vector<Int> coeffs;
    coeffs.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        coeffs.push_back(json_to_int(j[i], field + "[" + std::to_string(i) + "]"));
    return GradedElement::from_dense(coeffs);
}

Json melement_to_json(const MElement& x) { return graded_to_json(x.poly()); }

MElement json_to_melement(const Json& j, const std::string& field) {
    GradedElement poly = json_to_graded(j, field);
    if (poly.coeff(0) != 1)
        throw InvalidInput("field " + field + " must have constant term 1");
    return MElement(poly);
}

std::vector<MElement> parse_sequence(const Json& j) {
    const Json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("sequence"))
            throw InvalidInput("field sequence is required");
        arr = &j.at("sequence");
    }
    if (!arr->is_array() || arr->empty())
        throw InvalidInput("field sequence must be a nonempty array of polynomials");
    std::vector<MElement> out;
    out.reserve(arr->size());
    for (std::size_t i = 0; i < arr->size(); ++i)
        out.push_back(json_to_melement((*arr)[i], "sequence[" + std::to_string(i) + "]"));
    return out;
}

HodgeData parse_hodge(const Json& j) {
    if (!j.is_object()) throw InvalidInput("variety input must be a JSON object");
    if (!j.contains("dim")) throw InvalidInput("field dim is required");
    if (!j.contains("h0")) throw InvalidInput("field h0 is required");

    HodgeData h;
    h.dim = json_to_unsigned(j.at("dim"), "dim");
    if (!j.at("h0").is_array())
        throw InvalidInput("field h0 must be an array of dimensions");
    for (std::size_t i = 0; i < j.at("h0").size(); ++i)
        h.h0.push_back(json_to_int(j.at("h0")[i], "h0[" + std::to_string(i) + "]"));
    if (j.contains("name")) {
        if (!j.at("name").is_string())
            throw InvalidInput("field name must be a string");
        h.name = j.at("name").get<std::string>();
    }
    if (j.contains("plurigenera")) {
        const Json& pg = j.at("plurigenera");
        if (!pg.is_object())
            throw InvalidInput("field plurigenera must be an object keyed by n");
        for (const auto& [key, value] : pg.items()) {
            unsigned n = parse_unsigned_key(key, "plurigenera");
            h.plurigenera[n] = json_to_int(value, "plurigenera[" + key + "]");
        }
    }
    h.validate();
    return h;
}

Json hodge_to_json(const HodgeData& h) {
    Json out;
    out["dim"] = h.dim;
    out["h0"] = Json::array();
    for (const auto& v : h.h0) out["h0"].push_back(int_to_json(v));
    if (!h.name.empty()) out["name"] = h.name;
    if (!h.plurigenera.empty()) {
        Json pg = Json::object();
        for (const auto& [n, p] : h.plurigenera) pg[std::to_string(n)] = int_to_json(p);
        out["plurigenera"] = pg;
    }
    return out;
}

Json k0_to_json(const K0Expr& x) {
    Json out = Json::array();
    for (const auto& [term, coeff] : x.terms()) {
        Json t;
        t["symbol"] = term.symbol.factors();
        t["lpow"] = term.lpow;
        t["coeff"] = int_to_json(coeff);
        out.push_back(t);
    }
    return out;
}

K0Expr json_to_k0(const Json& j, const std::string& field) {
    if (!j.is_array())
        throw InvalidInput("field " + field + " must be an array of terms");
    K0Expr out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Json& t = j[i];
        std::string where = field + "[" + std::to_string(i) + "]";
        if (!t.is_object())
            throw InvalidInput("field " + where + " must be a term object");

        std::vector<std::string> factors;
        if (t.contains("symbol")) {
            const Json& sym = t.at("symbol");
            if (sym.is_string()) {
                factors.push_back(sym.get<std::string>());
            } else if (sym.is_array()) {
                for (const auto& f : sym) {
                    if (!f.is_string())
                        throw InvalidInput("field " + where + ".symbol must list names");
                    factors.push_back(f.get<std::string>());
                }
            } else {
                throw InvalidInput("field " + where + ".symbol must be a name or a list");
            }
        }
        unsigned lpow = t.contains("lpow") ? json_to_unsigned(t.at("lpow"), where + ".lpow") : 0;
        Int coeff = t.contains("coeff") ? json_to_int(t.at("coeff"), where + ".coeff") : Int(1);
        out += K0Expr::term(ClassSymbol(std::move(factors)), lpow, coeff);
    }
    return out;
}

Json k0_series_to_json(const TruncatedSeries<K0Expr>& s) {
    Json out;
    out["horizon"] = s.horizon();
    Json coeffs = Json::array();
    for (unsigned n = 0; n <= s.horizon(); ++n) coeffs.push_back(k0_to_json(s.coeff(n)));
    out["coeffs"] = coeffs;
    return out;
}

namespace {

SymRule parse_rule(const Json& j, const std::string& name) {
    std::string where = "sym_rules[" + name + "]";
    if (!j.is_object() || !j.contains("kind"))
        throw InvalidInput("field " + where + " must be an object with a kind");
    std::string kind = j.at("kind").is_string() ? j.at("kind").get<std::string>() : "";
    if (kind == "periodic") {
        if (!j.contains("period"))
            throw InvalidInput("field " + where + ".period is required");
        unsigned d = json_to_unsigned(j.at("period"), where + ".period");
        if (d == 0) throw InvalidInput("field " + where + ".period must be >= 1");
        return SymRule::periodic(d);
    }
    if (kind == "table") {
        if (!j.contains("values") || !j.at("values").is_object())
            throw InvalidInput("field " + where + ".values must be an object keyed by n");
        std::map<unsigned, K0Expr> values;
        for (const auto& [key, value] : j.at("values").items()) {
            unsigned n = parse_unsigned_key(key, where + ".values");
            if (n < 2)
                throw InvalidInput("field " + where + ".values must not redefine n < 2");
            values[n] = json_to_k0(value, where + ".values[" + key + "]");
        }
        return SymRule::from_table(std::move(values));
    }
    throw InvalidInput("field " + where + ".kind must be \"periodic\" or \"table\"");
}

}  // namespace

K0Manifest parse_manifest(const Json& j) {
    if (!j.is_object()) throw InvalidInput("manifest must be a JSON object");
    K0Manifest m;

    if (j.contains("symbols")) {
        if (!j.at("symbols").is_array())
            throw InvalidInput("field symbols must be an array of names");
        for (const auto& s : j.at("symbols")) {
            if (!s.is_string() || s.get<std::string>().empty())
                throw InvalidInput("field symbols must list nonempty names");
            m.symbols.push_back(s.get<std::string>());
        }
    }

    auto check_declared = [&](const std::string& name, const std::string& where) {
        if (m.symbols.empty()) return;
        for (const auto& s : m.symbols)
            if (s == name) return;
        throw InvalidInput("field " + where + " uses undeclared symbol " + name);
    };

    if (j.contains("sym_rules")) {
        if (!j.at("sym_rules").is_object())
            throw InvalidInput("field sym_rules must be an object keyed by symbol");
        for (const auto& [name, rule] : j.at("sym_rules").items()) {
            check_declared(name, "sym_rules");
            m.rules.set_rule(ClassSymbol::generator(name), parse_rule(rule, name));
        }
    }

    if (j.contains("counts")) {
        if (!j.at("counts").is_object())
            throw InvalidInput("field counts must be an object keyed by symbol");
        for (const auto& [name, list] : j.at("counts").items()) {
            check_declared(name, "counts");
            if (!list.is_array())
                throw InvalidInput("field counts[" + name + "] must be an array");
            std::vector<Int> seq;
            for (std::size_t i = 0; i < list.size(); ++i)
                seq.push_back(json_to_int(list[i], "counts[" + name + "][" + std::to_string(i) + "]"));
            m.counts[name] = std::move(seq);
        }
    }

    if (j.contains("q")) m.q = json_to_int(j.at("q"), "q");
    if (j.contains("horizon")) m.horizon = json_to_unsigned(j.at("horizon"), "horizon");
    if (j.contains("zeta_of")) {
        m.zeta_of = json_to_k0(j.at("zeta_of"), "zeta_of");
        for (const auto& [term, coeff] : m.zeta_of->terms())
            for (const auto& factor : term.symbol.factors())
                check_declared(factor, "zeta_of");
    }
    return m;
}

Json profile_to_json(const DegreeProfile& p) {
    Json out;
    out["degrees"] = p.degrees;
    Json maxima = Json::array();
    for (const auto& v : p.per_degree_max) maxima.push_back(int_to_json(v));
    out["per_degree_max"] = maxima;
    return out;
}

Json verdict_to_json(const RationalityVerdict& v) {
    Json out;
    switch (v.kind) {
        case RationalityVerdict::Kind::RationalConsistent:
            out["kind"] = "rational_consistent";
            break;
        case RationalityVerdict::Kind::IrrationalCertificate:
            out["kind"] = "irrational_certificate";
            break;
        case RationalityVerdict::Kind::Inconclusive:
            out["kind"] = "inconclusive";
            break;
    }
    out["p"] = v.p;
    out["i0"] = v.i0;
    out["depth"] = v.depth;
    if (!v.reason.empty()) out["reason"] = v.reason;
    if (!v.premises.empty()) out["premises"] = v.premises;
    if (!v.diagnostics.empty()) out["diagnostics"] = v.diagnostics;
    out["profile"] = profile_to_json(v.profile);
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open input file " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InvalidInput("invalid JSON in " + path + ": " + e.what());
    }
}

}  // namespace motivic
