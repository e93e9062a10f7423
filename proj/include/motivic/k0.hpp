#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "motivic/errors.hpp"
#include "motivic/ints.hpp"
#include "motivic/ring.hpp"
#include "motivic/series.hpp"

namespace motivic {

/// A formal product of named generator classes.
///
/// Symbols multiply freely and commutatively: the factor list is a sorted
/// multiset of names, and the empty product is the point class.  Nothing is
/// ever identified with anything else unless a rewrite rule says so.
struct ClassSymbol {
    ClassSymbol() = default;
    explicit ClassSymbol(std::vector<std::string> factors);

    static ClassSymbol point() { return ClassSymbol(); }
    static ClassSymbol generator(std::string name);

    bool is_point() const { return factors_.empty(); }
    const std::vector<std::string>& factors() const { return factors_; }

    /// Display name: "pt" for the empty product, otherwise factors joined
    /// with "*".
    std::string name() const;

    friend ClassSymbol operator*(const ClassSymbol& a, const ClassSymbol& b);
    auto operator<=>(const ClassSymbol&) const = default;

  private:
    std::vector<std::string> factors_;
};

/// One monomial of the symbolic Grothendieck ring: a class symbol times a
/// power of the Lefschetz class L.  Exponents are nonnegative; the ring is
/// never localized at L.
struct K0Term {
    ClassSymbol symbol;
    unsigned lpow = 0;

    auto operator<=>(const K0Term&) const = default;
};

/// Integer combination of K0Term monomials.
///
/// This is the working model of the Grothendieck ring of varieties: classes
/// are opaque symbols, L is the affine-line class, and multiplication is the
/// free commutative product.  Zero coefficients are never stored.
struct K0Expr {
    K0Expr() = default;

    static K0Expr zero() { return K0Expr(); }
    static K0Expr one();
    static K0Expr symbol(ClassSymbol s);
    static K0Expr lefschetz(unsigned power);
    static K0Expr term(ClassSymbol s, unsigned lpow, Int coeff);

    bool is_zero() const { return terms_.empty(); }
    const std::map<K0Term, Int>& terms() const { return terms_; }

    K0Expr& operator+=(const K0Expr& other);
    friend K0Expr operator+(K0Expr a, const K0Expr& b);
    K0Expr operator-() const;
    friend K0Expr operator-(K0Expr a, const K0Expr& b);
    friend K0Expr operator*(const K0Expr& a, const K0Expr& b);

    bool operator==(const K0Expr&) const = default;

  private:
    std::map<K0Term, Int> terms_;
};

std::ostream& operator<<(std::ostream& os, const ClassSymbol& s);
std::ostream& operator<<(std::ostream& os, const K0Expr& x);

template <>
struct ring_ops<K0Expr> {
    static K0Expr zero() { return K0Expr::zero(); }
    static K0Expr one() { return K0Expr::one(); }

    // Units are +-1 times the point class with no L factor.
    static bool is_unit(const K0Expr& x) {
        const auto& t = x.terms();
        if (t.size() != 1) return false;
        const auto& [term, coeff] = *t.begin();
        return term.symbol.is_point() && term.lpow == 0 &&
               (coeff == 1 || coeff == -1);
    }

    static K0Expr unit_inverse(const K0Expr& x) { return x; }
};

/// How Sym^n of one generator rewrites.
///
/// Periodic with period d: Sym^n depends only on n mod d, with residue 0 the
/// unit, residue 1 the generator itself, and residue r a derived symbol
/// "Sym^r(name)".  Table: explicit values per n; n not in the table is an
/// error.  Sym^0 and Sym^1 are handled structurally and never consult the
/// rule.
struct SymRule {
    enum class Kind { Periodic, Table };

    Kind kind = Kind::Periodic;
    unsigned period = 1;
    std::map<unsigned, K0Expr> table;

    static SymRule periodic(unsigned d);
    static SymRule from_table(std::map<unsigned, K0Expr> values);
};

/// Rewrite rules for symmetric powers of generators, keyed by class symbol.
///
/// A composite symbol (a product of two or more generators) has no canonical
/// Sym formula; asking for one without a declared rule raises MissingRule
/// rather than guessing.
struct SymRuleSet {
    void set_rule(const ClassSymbol& s, SymRule rule);
    bool has_rule(const ClassSymbol& s) const;

    /// Sym^n of a single symbol.  n = 0 gives the unit, n = 1 the symbol
    /// itself, and Sym^n(pt) = pt for every n; everything else consults the
    /// declared rule.
    K0Expr sym_of_symbol(const ClassSymbol& s, unsigned n) const;

  private:
    std::map<ClassSymbol, SymRule> rules_;
};

/// Sym^n extended from generators to arbitrary expressions.
///
/// Sym^n(L^a x) = L^(n a) Sym^n(x), sums expand through the lambda_t addition
/// rule, and negative multiples go through series inversion.  Every generator
/// appearing in x must have a rule (the point and pure L powers need none).
K0Expr sym_expr(unsigned n, const K0Expr& x, const SymRuleSet& rules);

/// The zeta series of x: coefficient n is sym_expr(n, x, rules).
TruncatedSeries<K0Expr> kapranov_zeta(const K0Expr& x, const SymRuleSet& rules,
                                      unsigned horizon);

/// Image in the quotient by the ideal (L): drops every term with a positive
/// L exponent.  Classes in the quotient are stable-birational types.
K0Expr set_L_zero(const K0Expr& x);

/// The class of an index-d Severi-Brauer variety B.  Index 1 means B is
/// split projective space, which is stably rational, so the class is 1.
K0Expr severi_brauer_class(unsigned d);

/// Rules encoding the period-d chain of stable birational equivalences
/// among the symmetric powers of B: Sym^(m+d)(B) and Sym^m(B) share a class,
/// and Sym^(kd)(B) is rational.
SymRuleSet severi_brauer_rules(unsigned d);

/// Zeta series of the index-d Severi-Brauer class in the quotient ring:
/// coefficient m is the class of Sym^(m mod d)(B), with residue 0 equal to 1.
TruncatedSeries<K0Expr> severi_brauer_zeta(unsigned d, unsigned horizon);

/// Checks that (1 - t^d) times the Severi-Brauer zeta series equals the
/// degree-(d-1) polynomial sum of the residue classes, i.e. that the series
/// is the expected rational function.  Requires horizon >= 2d.
bool verify_sb_closed_form(unsigned d, unsigned horizon);

/// Point-counting specialization: L becomes q and each generator its
/// assigned count; the result is the integer value of x.  Every generator
/// appearing in x must be assigned.
Int counting_specialize(const K0Expr& x,
                        const std::map<std::string, Int>& assignment,
                        const Int& q);

/// Count sequence N_1..N_horizon of x over the degree-m extensions: L
/// contributes q^(a m) and each generator its m-th declared count.  Feeding
/// the result to exp_from_log_counts grounds the zeta coefficients in
/// honest point counting.
std::vector<Int> counting_sequence(
    const K0Expr& x, const std::map<std::string, std::vector<Int>>& counts,
    const Int& q, unsigned horizon);

/// Orbit count of size-n multisets from N letters, computed the slow way:
/// average N^(cycles of sigma) over all of S_n.  Equals binomial(N+n-1, n);
/// the enumeration is capped at n <= 8.
Int burnside_multiset_count(unsigned N, unsigned n);

/// One stratum of the n-th symmetric power of a k-dimensional variety:
/// points with multiplicity type a given partition of n.
struct Stratum {
    /// Partition of n, parts in decreasing order.
    std::vector<unsigned> parts;
    /// r*k for r the number of parts.
    std::size_t dimension;
    /// Product over part sizes i with multiplicity l_i of (i!)^l_i * l_i!.
    Int normalizer_order;
};

/// All strata of Sym^n for a k-dimensional variety, one per partition of n.
std::vector<Stratum> stratify(unsigned n, unsigned k);

}  // namespace motivic
