#include "motivic/k0.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace motivic {

ClassSymbol::ClassSymbol(std::vector<std::string> factors)
    : factors_(std::move(factors)) {
    for (const auto& f : factors_)
        if (f.empty()) throw InvalidInput("class symbol factor must be a nonempty name");
    std::sort(factors_.begin(), factors_.end());
}

ClassSymbol ClassSymbol::generator(std::string name) {
    std::vector<std::string> fs;
    fs.push_back(std::move(name));
    return ClassSymbol(std::move(fs));
}

std::string ClassSymbol::name() const {
    if (factors_.empty()) return "pt";
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i > 0) out += "*";
        out += factors_[i];
    }
    return out;
}

ClassSymbol operator*(const ClassSymbol& a, const ClassSymbol& b) {
    ClassSymbol out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    std::merge(a.factors_.begin(), a.factors_.end(), b.factors_.begin(),
               b.factors_.end(), std::back_inserter(out.factors_));
    return out;
}

K0Expr K0Expr::one() { return term(ClassSymbol::point(), 0, Int(1)); }

K0Expr K0Expr::symbol(ClassSymbol s) { return term(std::move(s), 0, Int(1)); }

K0Expr K0Expr::lefschetz(unsigned power) {
    return term(ClassSymbol::point(), power, Int(1));
}

K0Expr K0Expr::term(ClassSymbol s, unsigned lpow, Int coeff) {
    K0Expr out;
    if (coeff != 0) out.terms_.emplace(K0Term{std::move(s), lpow}, std::move(coeff));
    return out;
}

K0Expr& K0Expr::operator+=(const K0Expr& other) {
    for (const auto& [term, coeff] : other.terms_) {
        auto it = terms_.find(term);
        if (it == terms_.end()) {
            terms_.emplace(term, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

K0Expr operator+(K0Expr a, const K0Expr& b) {
    a += b;
    return a;
}

K0Expr K0Expr::operator-() const {
    K0Expr out;
    for (const auto& [term, coeff] : terms_) out.terms_.emplace(term, -coeff);
    return out;
}

K0Expr operator-(K0Expr a, const K0Expr& b) {
    a += -b;
    return a;
}

K0Expr operator*(const K0Expr& a, const K0Expr& b) {
    K0Expr out;
    for (const auto& [ta, ca] : a.terms_)
        for (const auto& [tb, cb] : b.terms_)
            out += K0Expr::term(ta.symbol * tb.symbol, ta.lpow + tb.lpow, ca * cb);
    return out;
}

std::ostream& operator<<(std::ostream& os, const ClassSymbol& s) {
    return os << s.name();
}

std::ostream& operator<<(std::ostream& os, const K0Expr& x) {
    if (x.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [term, coeff] : x.terms()) {
        Int mag = coeff < 0 ? Int(-coeff) : coeff;
        if (first) {
            if (coeff < 0) os << "-";
        } else {
            os << (coeff < 0 ? " - " : " + ");
        }
        first = false;

        bool plain = term.symbol.is_point() && term.lpow == 0;
        bool wrote_factor = false;
        if (mag != 1 || plain) {
            os << mag;
            wrote_factor = true;
        }
        if (!term.symbol.is_point()) {
            if (wrote_factor) os << "*";
            os << "<" << term.symbol << ">";
            wrote_factor = true;
        }
        if (term.lpow > 0) {
            if (wrote_factor) os << "*";
            os << "L";
            if (term.lpow > 1) os << "^" << term.lpow;
        }
    }
    return os;
}

SymRule SymRule::periodic(unsigned d) {
    if (d == 0) throw InvalidInput("periodic Sym rule needs period >= 1");
    SymRule r;
    r.kind = Kind::Periodic;
    r.period = d;
    return r;
}

SymRule SymRule::from_table(std::map<unsigned, K0Expr> values) {
    SymRule r;
    r.kind = Kind::Table;
    r.table = std::move(values);
    return r;
}

void SymRuleSet::set_rule(const ClassSymbol& s, SymRule rule) {
    if (s.is_point()) throw InvalidInput("the point class never needs a Sym rule");
    rules_[s] = std::move(rule);
}

bool SymRuleSet::has_rule(const ClassSymbol& s) const {
    return rules_.count(s) > 0;
}

K0Expr SymRuleSet::sym_of_symbol(const ClassSymbol& s, unsigned n) const {
    if (n == 0) return K0Expr::one();
    if (s.is_point()) return K0Expr::one();
    if (n == 1) return K0Expr::symbol(s);

    auto it = rules_.find(s);
    if (it == rules_.end())
        throw MissingRule("no Sym rule declared for generator " + s.name());
    const SymRule& rule = it->second;

    if (rule.kind == SymRule::Kind::Periodic) {
        unsigned r = n % rule.period;
        if (r == 0) return K0Expr::one();
        if (r == 1) return K0Expr::symbol(s);
        std::ostringstream derived;
        derived << "Sym^" << r << "(" << s.name() << ")";
        return K0Expr::symbol(ClassSymbol::generator(derived.str()));
    }

    auto entry = rule.table.find(n);
    if (entry == rule.table.end())
        throw MissingRule("Sym rule table for generator " + s.name() +
                          " has no entry for n = " + std::to_string(n));
    return entry->second;
}

namespace {

// lambda_t of a single monomial c * <S> L^a: the base series has coefficient
// n equal to L^(n a) Sym^n(S), and the integer multiple c is absorbed as the
// c-th power of that series.
TruncatedSeries<K0Expr> zeta_of_term(const K0Term& term, const Int& coeff,
                                     const SymRuleSet& rules, unsigned horizon) {
    std::vector<K0Expr> base(horizon + 1);
    for (unsigned n = 0; n <= horizon; ++n)
        base[n] = K0Expr::lefschetz(n * term.lpow) *
                  rules.sym_of_symbol(term.symbol, n);
    return series_pow(TruncatedSeries<K0Expr>::from_coeffs(std::move(base)), coeff);
}

}  // namespace

TruncatedSeries<K0Expr> kapranov_zeta(const K0Expr& x, const SymRuleSet& rules,
                                      unsigned horizon) {
    auto acc = TruncatedSeries<K0Expr>::one(horizon);
    for (const auto& [term, coeff] : x.terms())
        acc = acc * zeta_of_term(term, coeff, rules, horizon);
    return acc;
}

K0Expr sym_expr(unsigned n, const K0Expr& x, const SymRuleSet& rules) {
    return kapranov_zeta(x, rules, n).coeff(n);
}

K0Expr set_L_zero(const K0Expr& x) {
    K0Expr out;
    for (const auto& [term, coeff] : x.terms())
        if (term.lpow == 0) out += K0Expr::term(term.symbol, 0, coeff);
    return out;
}

K0Expr severi_brauer_class(unsigned d) {
    if (d == 0) throw InvalidInput("Severi-Brauer index must be >= 1");
    if (d == 1) return K0Expr::one();
    return K0Expr::symbol(ClassSymbol::generator("B"));
}

SymRuleSet severi_brauer_rules(unsigned d) {
    if (d == 0) throw InvalidInput("Severi-Brauer index must be >= 1");
    SymRuleSet rules;
    if (d >= 2)
        rules.set_rule(ClassSymbol::generator("B"), SymRule::periodic(d));
    return rules;
}

TruncatedSeries<K0Expr> severi_brauer_zeta(unsigned d, unsigned horizon) {
    return kapranov_zeta(severi_brauer_class(d), severi_brauer_rules(d), horizon);
}

bool verify_sb_closed_form(unsigned d, unsigned horizon) {
    if (d == 0) throw InvalidInput("Severi-Brauer index must be >= 1");
    if (horizon < 2 * d)
        throw HorizonTooSmall("closed-form check needs horizon >= 2d");

    auto zeta = severi_brauer_zeta(d, horizon);
    auto rules = severi_brauer_rules(d);

    // (1 - t^d) * Z must equal the polynomial whose coefficient i is the
    // class of Sym^i(B) for 0 <= i <= d-1 and zero beyond.
    std::vector<K0Expr> one_minus_td(horizon + 1, K0Expr::zero());
    one_minus_td[0] = K0Expr::one();
    one_minus_td[d] = -K0Expr::one();
    auto product = TruncatedSeries<K0Expr>::from_coeffs(std::move(one_minus_td)) * zeta;

    std::vector<K0Expr> poly(horizon + 1, K0Expr::zero());
    auto B = severi_brauer_class(d);
    for (unsigned i = 0; i < d; ++i) poly[i] = sym_expr(i, B, rules);
    return product == TruncatedSeries<K0Expr>::from_coeffs(std::move(poly));
}

Int counting_specialize(const K0Expr& x,
                        const std::map<std::string, Int>& assignment,
                        const Int& q) {
    Int total = 0;
    for (const auto& [term, coeff] : x.terms()) {
        Int value = coeff * int_pow(q, term.lpow);
        for (const auto& factor : term.symbol.factors()) {
            auto it = assignment.find(factor);
            if (it == assignment.end())
                throw UnassignedSymbol("no count assigned to generator " + factor);
            value *= it->second;
        }
        total += value;
    }
    return total;
}

std::vector<Int> counting_sequence(
    const K0Expr& x, const std::map<std::string, std::vector<Int>>& counts,
    const Int& q, unsigned horizon) {
    std::vector<Int> out;
    out.reserve(horizon);
    for (unsigned m = 1; m <= horizon; ++m) {
        Int total = 0;
        for (const auto& [term, coeff] : x.terms()) {
            Int value = coeff * int_pow(int_pow(q, term.lpow), m);
            for (const auto& factor : term.symbol.factors()) {
                auto it = counts.find(factor);
                if (it == counts.end())
                    throw UnassignedSymbol("no count sequence for generator " + factor);
                if (it->second.size() < m)
                    throw InvalidInput("count sequence for generator " + factor +
                                       " is shorter than the horizon");
                value *= it->second[m - 1];
            }
            total += value;
        }
        out.push_back(std::move(total));
    }
    return out;
}

Int burnside_multiset_count(unsigned N, unsigned n) {
    if (n > 8)
        throw SizeGuardExceeded("permutation enumeration is capped at n <= 8");
    if (n == 0) return 1;

    std::vector<unsigned> perm(n);
    for (unsigned i = 0; i < n; ++i) perm[i] = i;

    Int total = 0;
    do {
        unsigned cycles = 0;
        std::vector<bool> seen(n, false);
        for (unsigned i = 0; i < n; ++i) {
            if (seen[i]) continue;
            ++cycles;
            for (unsigned j = i; !seen[j]; j = perm[j]) seen[j] = true;
        }
        total += int_pow(Int(N), cycles);
    } while (std::next_permutation(perm.begin(), perm.end()));

    Int order = factorial(n);
    if (!mpz_divisible_p(total.get_mpz_t(), order.get_mpz_t()))
        throw Error("orbit-count average is not integral");
    return total / order;
}

std::vector<Stratum> stratify(unsigned n, unsigned k) {
    if (n == 0 || k == 0)
        throw InvalidInput("stratify needs positive n and k");

    // Kelleher's ascending-composition walk emits the partitions of n in
    // lexicographic order of their ascending part lists.
    std::vector<std::vector<unsigned>> partitions;
    std::vector<unsigned> a(n + 1, 0);
    unsigned depth = 1;
    a[1] = n;
    while (depth != 0) {
        unsigned x = a[depth - 1] + 1;
        unsigned y = a[depth] - 1;
        depth -= 1;
        while (x <= y) {
            a[depth] = x;
            y -= x;
            depth += 1;
        }
        a[depth] = x + y;
        partitions.emplace_back(a.begin(), a.begin() + depth + 1);
    }

    std::vector<Stratum> out;
    out.reserve(partitions.size());
    for (auto& parts : partitions) {
        std::map<unsigned, unsigned> multiplicity;
        for (unsigned part : parts) ++multiplicity[part];

        Int order = 1;
        for (const auto& [size, count] : multiplicity)
            order *= int_pow(factorial(size), count) * factorial(count);

        std::reverse(parts.begin(), parts.end());
        std::size_t dim = parts.size() * static_cast<std::size_t>(k);
        out.push_back(Stratum{std::move(parts), dim, order});
    }
    return out;
}

}  // namespace motivic
