#include "motivic/selftest.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "motivic/graded.hpp"
#include "motivic/k0.hpp"
#include "motivic/measures.hpp"
#include "motivic/rationality.hpp"
#include "motivic/series.hpp"
#include "motivic/zm.hpp"

namespace motivic {

void SelftestLimits::validate() const {
    if (horizon < 6)
        throw InvalidInput("selftest horizon must be at least 6");
    if (pairs < 1)
        throw InvalidInput("selftest needs at least one trial per suite");
    if (oracle_m < 1)
        throw InvalidInput("oracle sweep needs m >= 1");
}

namespace {

// Collects checks for one suite; only the first failure is kept.
struct Reporter {
    unsigned checks = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && first_failure.empty()) first_failure = what;
    }
};

GradedElement random_graded(std::mt19937& gen, unsigned top_degree, int coeff_bound) {
    std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
    std::uniform_int_distribution<unsigned> deg(0, top_degree);
    GradedElement x;
    std::uniform_int_distribution<int> nterms(1, 3);
    int n = nterms(gen);
    for (int i = 0; i < n; ++i) x += GradedElement::monomial(deg(gen), Int(coeff(gen)));
    return x;
}

GradedElement random_unit_poly(std::mt19937& gen, unsigned top_degree) {
    std::uniform_int_distribution<int> coeff(0, 3);
    GradedElement x = ring_ops<GradedElement>::one();
    for (unsigned d = 1; d <= top_degree; ++d)
        x += GradedElement::monomial(d, Int(coeff(gen)));
    return x;
}

ZMElement random_zm(std::mt19937& gen) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> nterms(1, 2);
    ZMElement x;
    int n = nterms(gen);
    for (int i = 0; i < n; ++i)
        x += ZMElement::scaled(MElement(random_unit_poly(gen, 2)), Int(coeff(gen)));
    return x;
}

SymRuleSet selftest_rules() {
    SymRuleSet rules;
    rules.set_rule(ClassSymbol::generator("B"), SymRule::periodic(3));
    rules.set_rule(ClassSymbol::generator("C"), SymRule::periodic(2));
    std::map<unsigned, K0Expr> table;
    for (unsigned n = 2; n <= 24; ++n)
        table[n] = K0Expr::term(ClassSymbol::generator("D"), n - 1, Int(n));
    rules.set_rule(ClassSymbol::generator("D"), SymRule::from_table(std::move(table)));
    return rules;
}

K0Expr random_k0(std::mt19937& gen) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<unsigned> lpow(0, 2);
    std::uniform_int_distribution<int> pick(0, 3);
    const ClassSymbol pool[4] = {ClassSymbol::point(), ClassSymbol::generator("B"),
                                 ClassSymbol::generator("C"),
                                 ClassSymbol::generator("D")};
    K0Expr x;
    std::uniform_int_distribution<int> nterms(1, 3);
    int n = nterms(gen);
    for (int i = 0; i < n; ++i)
        x += K0Expr::term(pool[pick(gen)], lpow(gen), Int(coeff(gen)));
    return x;
}

template <typename T>
std::string render(const T& value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

HodgeData curve_model(long genus) {
    return HodgeData{1, {Int(1), Int(genus)}, {}, "genus-" + std::to_string(genus)};
}

using Suite = std::function<void(Reporter&, const SelftestLimits&)>;

void suite_series_ring_laws(Reporter& rep, const SelftestLimits& limits) {
    std::mt19937 gen(limits.seed + 1);
    unsigned h = limits.horizon;
    for (unsigned trial = 0; trial < limits.pairs; ++trial) {
        std::vector<Int> ca, cb, cc;
        std::uniform_int_distribution<int> coeff(-4, 4);
        for (unsigned n = 0; n <= h; ++n) {
            ca.push_back(Int(coeff(gen)));
            cb.push_back(Int(coeff(gen)));
            cc.push_back(Int(coeff(gen)));
        }
        auto a = TruncatedSeries<Int>::from_coeffs(ca);
        auto b = TruncatedSeries<Int>::from_coeffs(cb);
        auto c = TruncatedSeries<Int>::from_coeffs(cc);
        rep.expect(a + b == b + a, "series addition commutes");
        rep.expect(a * b == b * a, "series multiplication commutes");
        rep.expect(a * (b + c) == a * b + a * c, "series distributivity");
        rep.expect((a * b) * c == a * (b * c), "series associativity");
    }
}

void suite_series_inverse(Reporter& rep, const SelftestLimits& limits) {
    std::mt19937 gen(limits.seed + 2);
    unsigned h = limits.horizon;
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> sign(0, 1);
    for (unsigned trial = 0; trial < limits.pairs; ++trial) {
        std::vector<Int> ca{Int(sign(gen) ? 1 : -1)};
        for (unsigned n = 1; n <= h; ++n) ca.push_back(Int(coeff(gen)));
        auto a = TruncatedSeries<Int>::from_coeffs(ca);
        rep.expect(a * series_inverse(a) == TruncatedSeries<Int>::one(h),
                   "series times its inverse is 1");
    }
}

void suite_exp_log_counts(Reporter& rep, const SelftestLimits& limits) {
    unsigned h = limits.horizon;
    for (int q : {2, 3}) {
        std::vector<Int> counts;
        for (unsigned m = 1; m <= h; ++m) counts.push_back(int_pow(Int(q), m) + 1);
        auto series = exp_from_log_counts(counts, h);
        for (unsigned n = 0; n <= h; ++n) {
            Int expected = (int_pow(Int(q), n + 1) - 1) / (q - 1);
            rep.expect(series.coeff(n) == expected,
                       "projective-line counts at q=" + std::to_string(q) +
                           ", n=" + std::to_string(n));
        }
    }

    // Random realizable counts stay integral: cells contribute a + b 2^m + c 3^m.
    std::mt19937 gen(limits.seed + 3);
    std::uniform_int_distribution<int> cells(0, 3);
    for (unsigned trial = 0; trial < limits.pairs; ++trial) {
        int a = cells(gen), b = cells(gen), c = cells(gen);
        std::vector<Int> counts;
        for (unsigned m = 1; m <= h; ++m)
            counts.push_back(Int(a) + Int(b) * int_pow(Int(2), m) +
                             Int(c) * int_pow(Int(3), m));
        try {
            exp_from_log_counts(counts, h);
            rep.expect(true, "");
        } catch (const NonIntegralCoefficient& e) {
            rep.expect(false, std::string("realizable counts must exponentiate integrally: ") + e.what());
        }
    }
}

void suite_rational_fit(Reporter& rep, const SelftestLimits& limits) {
    std::mt19937 gen(limits.seed + 4);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<unsigned> deg(0, 2);
    for (unsigned trial = 0; trial < limits.pairs / 4 + 1; ++trial) {
        unsigned num_deg = deg(gen), den_deg = deg(gen);
        std::vector<Rat> num(num_deg + 1), den(den_deg + 1);
        for (auto& v : num) v = Rat(coeff(gen));
        den[0] = Rat(1);
        for (unsigned i = 1; i <= den_deg; ++i) den[i] = Rat(coeff(gen));
        unsigned h = 2 * (num_deg + den_deg) + 6;
        RationalForm<Rat> form{num, den};
        auto series = expand(form, h);
        std::vector<Rat> window;
        for (unsigned n = 0; n <= h; ++n) window.push_back(series.coeff(n));
        auto fit = fit_rational_form(window, std::max(num_deg, den_deg) + 1);
        if (!fit) {
            rep.expect(false, "rational data must be recognized");
            continue;
        }
        auto again = expand(*fit, h);
        rep.expect(again == series, "recognized form re-expands to the data");
    }
}

void suite_lambda_addition_graded(Reporter& rep, const SelftestLimits& limits) {
    std::mt19937 gen(limits.seed + 5);
    for (unsigned trial = 0; trial < limits.pairs; ++trial) {
        auto x = random_graded(gen, 3, 3);
        auto y = random_graded(gen, 3, 3);
        for (unsigned n = 0; n <= 5; ++n) {
            GradedElement rhs;
            for (unsigned i = 0; i <= n; ++i)
                rhs += lambda_graded(i, x) * lambda_graded(n - i, y);
            rep.expect(lambda_graded(n, x + y) == rhs,
                       "graded lambda addition rule at n=" + std::to_string(n));
        }
    }
}

void suite_lambda_addition_zm(Reporter& rep, const SelftestLimits& limits) {
    std::mt19937 gen(limits.seed + 6);
    for (unsigned trial = 0; trial < limits.pairs; ++trial) {
        auto x = random_zm(gen);
        auto y = random_zm(gen);
        for (unsigned n = 0; n <= 4; ++n) {
            ZMElement rhs;
            for (unsigned i = 0; i <= n; ++i)
                rhs += lambda_zm(i, x) * lambda_zm(n - i, y);
            rep.expect(lambda_zm(n, x + y) == rhs,
                       "monoid-algebra lambda addition rule at n=" + std::to_string(n));
        }
    }
}

void suite_lambda_addition_k0(Reporter& rep, const SelftestLimits& limits) {
    auto rules = selftest_rules();
    std::mt19937 gen(limits.seed + 7);
    for (unsigned trial = 0; trial < limits.pairs; ++trial) {
        auto x = random_k0(gen);
        auto y = random_k0(gen);
        for (unsigned n = 0; n <= 4; ++n) {
            K0Expr rhs;
            for (unsigned i = 0; i <= n; ++i)
                rhs += sym_expr(i, x, rules) * sym_expr(n - i, y, rules);
            rep.expect(sym_expr(n, x + y, rules) == rhs,
                       "symbolic lambda addition rule at n=" + std::to_string(n));
        }
    }
}

void suite_lambda_inverse_pairs(Reporter& rep, const SelftestLimits& limits) {
    std::mt19937 gen(limits.seed + 8);
    unsigned h = 6;
    for (unsigned trial = 0; trial < limits.pairs; ++trial) {
        auto x = random_graded(gen, 3, 2);
        auto prod = lambda_graded_series(x, h) * lambda_graded_series(-x, h);
        rep.expect(prod == TruncatedSeries<GradedElement>::one(h),
                   "lambda_t(x) lambda_t(-x) = 1 for " + render(x));
    }
}

void suite_lambda_unit(Reporter& rep, const SelftestLimits& limits) {
    auto series = lambda_graded_series(ring_ops<GradedElement>::one(), limits.horizon);
    for (unsigned n = 0; n <= limits.horizon; ++n)
        rep.expect(series.coeff(n) == ring_ops<GradedElement>::one(),
                   "Sym^n of the point is the point");
}

void suite_adams_parity(Reporter& rep, const SelftestLimits&) {
    for (unsigned p = 0; p <= 3; ++p) {
        auto line = GradedElement::monomial(p, Int(1));
        for (unsigned k = 1; k <= 4; ++k) {
            int sign = ((k - 1) * p) % 2 == 0 ? 1 : -1;
            auto expected = GradedElement::monomial(k * p, Int(sign));
            rep.expect(adams_graded(k, line) == expected,
                       "psi^" + std::to_string(k) + " on a degree-" +
                           std::to_string(p) + " line");
        }
    }
}

void suite_adams_additivity(Reporter& rep, const SelftestLimits& limits) {
    std::mt19937 gen(limits.seed + 9);
    for (unsigned trial = 0; trial < limits.pairs; ++trial) {
        auto x = random_graded(gen, 3, 3);
        auto y = random_graded(gen, 3, 3);
        for (unsigned k = 1; k <= 4; ++k)
            rep.expect(adams_graded(k, x + y) == adams_graded(k, x) + adams_graded(k, y),
                       "psi^" + std::to_string(k) + " additivity");
    }
}

void suite_adams_multiplicativity(Reporter& rep, const SelftestLimits& limits) {
    std::mt19937 gen(limits.seed + 10);
    for (unsigned trial = 0; trial < limits.pairs; ++trial) {
        auto x = random_graded(gen, 2, 2);
        auto y = random_graded(gen, 2, 2);
        for (unsigned k = 1; k <= 3; ++k)
            rep.expect(adams_graded(k, x * y) == adams_graded(k, x) * adams_graded(k, y),
                       "psi^" + std::to_string(k) + " multiplicativity");
    }
}

void suite_plethysm_oracle(Reporter& rep, const SelftestLimits& limits) {
    // Every graded input with the given total dimension budget and top
    // degree <= 3, compared against the symmetric-group trace average.
    unsigned budget = limits.oracle_dim;
    std::vector<std::vector<Int>> inputs;
    for (unsigned d0 = 0; d0 <= budget; ++d0)
        for (unsigned d1 = 0; d0 + d1 <= budget; ++d1)
            for (unsigned d2 = 0; d0 + d1 + d2 <= budget; ++d2)
                for (unsigned d3 = 0; d0 + d1 + d2 + d3 <= budget; ++d3)
                    inputs.push_back({Int(d0), Int(d1), Int(d2), Int(d3)});

    for (const auto& dense : inputs) {
        auto x = GradedElement::from_dense(dense);
        for (unsigned m = 1; m <= limits.oracle_m; ++m) {
            auto lam = lambda_graded(m, x);
            unsigned top = 3 * m;
            for (unsigned j = 0; j <= top; ++j)
                rep.expect(lam.coeff(j) == invariants_dim_bruteforce(x, m, j),
                           "lambda^" + std::to_string(m) + " of " + render(x) +
                               " at degree " + std::to_string(j));
        }
    }
}

void suite_burnside(Reporter& rep, const SelftestLimits&) {
    for (unsigned N = 0; N <= 6; ++N)
        for (unsigned n = 0; n <= 6; ++n)
            rep.expect(burnside_multiset_count(N, n) == binomial(Int(N) + n - 1, n),
                       "multiset orbit count at N=" + std::to_string(N) +
                           ", n=" + std::to_string(n));
}

void suite_sb_closed_form(Reporter& rep, const SelftestLimits& limits) {
    for (unsigned d : {1u, 2u, 3u, 5u, 7u}) {
        unsigned h = std::max(limits.horizon, 2 * d);
        rep.expect(verify_sb_closed_form(d, h),
                   "Severi-Brauer closed form at index " + std::to_string(d));
    }
}

void suite_lambda_ideal(Reporter& rep, const SelftestLimits& limits) {
    auto rules = selftest_rules();
    auto L = K0Expr::lefschetz(1);
    std::mt19937 gen(limits.seed + 11);
    for (unsigned trial = 0; trial < 50; ++trial) {
        auto x = random_k0(gen);
        for (unsigned n = 1; n <= 10; ++n)
            rep.expect(set_L_zero(sym_expr(n, L * x, rules)).is_zero(),
                       "Sym^" + std::to_string(n) + " stays in the ideal (L)");
    }
}

void suite_a1_shift(Reporter& rep, const SelftestLimits& limits) {
    auto rules = selftest_rules();
    auto L = K0Expr::lefschetz(1);
    std::mt19937 gen(limits.seed + 12);
    const unsigned h = 20;
    for (unsigned trial = 0; trial < 10; ++trial) {
        auto x = random_k0(gen);
        auto plain = kapranov_zeta(x, rules, h);
        auto twisted = kapranov_zeta(L * x, rules, h);
        for (unsigned n = 0; n <= h; ++n)
            rep.expect(twisted.coeff(n) == K0Expr::lefschetz(n) * plain.coeff(n),
                       "zeta of L x at t^" + std::to_string(n));
    }
}

void suite_counting_consistency(Reporter& rep, const SelftestLimits&) {
    auto p1 = K0Expr::one() + K0Expr::lefschetz(1);
    const unsigned h = 12;
    auto zeta = kapranov_zeta(p1, SymRuleSet{}, h);
    for (int q : {2, 3}) {
        auto counts = counting_sequence(p1, {}, Int(q), h);
        auto expected = exp_from_log_counts(counts, h);
        for (unsigned n = 0; n <= h; ++n)
            rep.expect(counting_specialize(zeta.coeff(n), {}, Int(q)) == expected.coeff(n),
                       "specialized zeta coefficient at q=" + std::to_string(q) +
                           ", n=" + std::to_string(n));
    }
}

void suite_disjoint_union_counts(Reporter& rep, const SelftestLimits& limits) {
    std::mt19937 gen(limits.seed + 13);
    std::uniform_int_distribution<int> small(1, 6);
    const unsigned h = 8;
    for (unsigned trial = 0; trial < limits.pairs / 8 + 1; ++trial) {
        Int a(small(gen)), b(small(gen));
        std::vector<Int> nx(h, a), ny(h, b), nu(h, a + b);
        auto sx = exp_from_log_counts(nx, h);
        auto sy = exp_from_log_counts(ny, h);
        auto su = exp_from_log_counts(nu, h);
        for (unsigned n = 0; n <= h; ++n) {
            Int conv = 0;
            for (unsigned i = 0; i <= n; ++i) conv += sx.coeff(i) * sy.coeff(n - i);
            rep.expect(su.coeff(n) == conv,
                       "union counts convolve at n=" + std::to_string(n));
        }
    }
}

void suite_curve_rationality(Reporter& rep, const SelftestLimits&) {
    AnalysisContext ctx;
    ctx.horizon = 40;
    for (long g = 0; g <= 3; ++g) {
        auto verdict = analyze(mu1_sym_sequence(curve_model(g), ctx.horizon), ctx);
        rep.expect(verdict.kind == RationalityVerdict::Kind::RationalConsistent &&
                       verdict.p == 1 && verdict.i0 == static_cast<unsigned>(g),
                   "genus-" + std::to_string(g) + " curve stabilizes at (1, g)");
    }
}

void suite_surface_certificates(Reporter& rep, const SelftestLimits&) {
    AnalysisContext ctx;
    ctx.horizon = 60;
    ctx.bounded_coefficients = true;
    HodgeData k3{2, {Int(1), Int(0), Int(1)}, {}, "K3"};
    HodgeData abelian{2, {Int(1), Int(2), Int(1)}, {}, "abelian"};
    for (const auto& h : {k3, abelian}) {
        auto verdict = analyze(mu1_sym_sequence(h, ctx.horizon), ctx);
        rep.expect(verdict.kind == RationalityVerdict::Kind::IrrationalCertificate,
                   h.name + " surface earns a certificate");
    }
    ctx.bounded_coefficients = false;
    auto verdict = analyze(mu1_sym_sequence(k3, ctx.horizon), ctx);
    rep.expect(verdict.kind == RationalityVerdict::Kind::Inconclusive,
               "no certificate without the boundedness premise");
}

void suite_leading_terms(Reporter& rep, const SelftestLimits&) {
    Int prev(0);
    for (unsigned m = 1; m <= 30; ++m) {
        auto lead = mun_sym_leading(Int(2), 2, 2, m);
        rep.expect(lead.degree == 2 * m, "leading degree 2m at m=" + std::to_string(m));
        rep.expect(lead.coefficient == binomial(Int(2) + m - 1, m),
                   "leading coefficient at m=" + std::to_string(m));
        rep.expect(lead.coefficient > prev, "leading coefficients increase strictly");
        prev = lead.coefficient;
    }
}

void suite_witnesses(Reporter& rep, const SelftestLimits&) {
    HodgeData k3{2, {Int(1), Int(0), Int(1)}, {}, "K3"};
    auto w = distinguish_sym_powers(k3, 2, 3);
    rep.expect(w.has_value() && w->degree_m == 4 && w->degree_l == 6,
               "K3 symmetric squares and cubes separate at degrees (4, 6)");

    HodgeData ruled{2, {Int(1), Int(0), Int(0)}, {{1, Int(0)}, {2, Int(0)}}, "ruled"};
    rep.expect(!distinguish_sym_powers(ruled, 2, 3).has_value(),
               "no witness without forms or plurigenera");
}

void suite_stratify(Reporter& rep, const SelftestLimits&) {
    const unsigned expected_counts[] = {1, 2, 3, 5, 7, 11, 15, 22};
    for (unsigned n = 1; n <= 8; ++n) {
        auto strata = stratify(n, 1);
        rep.expect(strata.size() == expected_counts[n - 1],
                   "partition count of n=" + std::to_string(n));
        Int nfact = factorial(n);
        for (const auto& s : strata)
            rep.expect(mpz_divisible_p(nfact.get_mpz_t(), s.normalizer_order.get_mpz_t()) != 0,
                       "normalizer order divides n!");
    }
}

void suite_degree_law(Reporter& rep, const SelftestLimits& limits) {
    std::mt19937 gen(limits.seed + 14);
    std::uniform_int_distribution<int> coeff(0, 3);
    for (unsigned trial = 0; trial < limits.pairs; ++trial) {
        GradedElement x = ring_ops<GradedElement>::one();
        for (unsigned d = 1; d <= 3; ++d) x += GradedElement::monomial(d, Int(coeff(gen)));
        unsigned d = x.degree();
        for (unsigned m = 1; m <= 4; ++m) {
            auto lam = lambda_graded(m, x);
            rep.expect(lam.degree() <= m * d, "degree of lambda^m is at most m deg");
            if (d % 2 == 0 && x.coeff(d) > 0)
                rep.expect(lam.degree() == m * d,
                           "even positive top degree multiplies exactly");
        }
    }
}

const std::pair<const char*, Suite> kSuites[] = {
    {"series-ring-laws", suite_series_ring_laws},
    {"series-inverse", suite_series_inverse},
    {"exp-log-counts", suite_exp_log_counts},
    {"rational-fit", suite_rational_fit},
    {"lambda-addition-graded", suite_lambda_addition_graded},
    {"lambda-addition-zm", suite_lambda_addition_zm},
    {"lambda-addition-k0", suite_lambda_addition_k0},
    {"lambda-inverse-pairs", suite_lambda_inverse_pairs},
    {"lambda-unit", suite_lambda_unit},
    {"adams-parity", suite_adams_parity},
    {"adams-additivity", suite_adams_additivity},
    {"adams-multiplicativity", suite_adams_multiplicativity},
    {"plethysm-oracle", suite_plethysm_oracle},
    {"burnside-binomial", suite_burnside},
    {"sb-closed-form", suite_sb_closed_form},
    {"lambda-ideal-k0", suite_lambda_ideal},
    {"a1-shift", suite_a1_shift},
    {"counting-consistency", suite_counting_consistency},
    {"disjoint-union-counts", suite_disjoint_union_counts},
    {"curve-rationality", suite_curve_rationality},
    {"surface-certificates", suite_surface_certificates},
    {"leading-terms", suite_leading_terms},
    {"witness-degrees", suite_witnesses},
    {"stratify-partitions", suite_stratify},
    {"degree-law", suite_degree_law},
};

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestLimits& limits) {
    limits.validate();
    std::vector<SuiteResult> results;
    results.reserve(std::size(kSuites));
    for (const auto& [name, suite] : kSuites) {
        SuiteResult result;
        result.name = name;
        Reporter rep;
        try {
            suite(rep, limits);
            if (rep.first_failure.empty()) {
                result.status = SuiteResult::Status::Pass;
                result.detail = std::to_string(rep.checks) + " checks";
            } else {
                result.status = SuiteResult::Status::Fail;
                result.detail = rep.first_failure;
            }
        } catch (const SizeGuardExceeded& e) {
            result.status = SuiteResult::Status::Skip;
            result.detail = e.what();
        } catch (const std::exception& e) {
            result.status = SuiteResult::Status::Fail;
            result.detail = e.what();
        }
        results.push_back(std::move(result));
    }
    return results;
}

bool all_passed(const std::vector<SuiteResult>& results) {
    for (const auto& r : results)
        if (r.status == SuiteResult::Status::Fail) return false;
    return true;
}

}  // namespace motivic
