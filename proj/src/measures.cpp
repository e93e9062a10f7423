#include "motivic/measures.hpp"

#include <algorithm>
#include <numeric>

namespace motivic {

void HodgeData::validate() const {
    if (h0.size() != static_cast<std::size_t>(dim) + 1)
        throw InvalidInput("HodgeData '" + name + "': h0 must list degrees 0..dim");
    if (h0[0] != 1) throw InvalidInput("HodgeData '" + name + "': h0[0] must be 1");
    for (const Int& v : h0)
        if (v < 0) throw InvalidInput("HodgeData '" + name + "': negative form dimension");
    for (const auto& [n, p] : plurigenera) {
        if (n == 0) throw InvalidInput("HodgeData '" + name + "': plurigenus index 0");
        if (p < 0) throw InvalidInput("HodgeData '" + name + "': negative plurigenus");
    }
}

MElement mu1(const HodgeData& h) {
    h.validate();
    return MElement(GradedElement::from_dense(h.h0));
}

HodgeData product_hodge(const HodgeData& a, const HodgeData& b) {
    a.validate();
    b.validate();
    HodgeData p;
    p.dim = a.dim + b.dim;
    p.name = a.name + " x " + b.name;
    p.h0.assign(p.dim + 1, Int(0));
    for (unsigned i = 0; i <= a.dim; ++i)
        for (unsigned j = 0; j <= b.dim; ++j) p.h0[i + j] += a.h0[i] * b.h0[j];
    for (const auto& [n, pa] : a.plurigenera) {
        auto it = b.plurigenera.find(n);
        if (it != b.plurigenera.end()) p.plurigenera[n] = pa * it->second;
    }
    return p;
}

MElement mu1_sym(const HodgeData& h, unsigned m) {
    return MElement(lambda_graded(m, mu1(h).poly()));
}

std::vector<MElement> mu1_sym_sequence(const HodgeData& h, unsigned horizon) {
    TruncatedSeries<GradedElement> series = lambda_graded_series(mu1(h).poly(), horizon);
    std::vector<MElement> out;
    out.reserve(horizon + 1);
    for (unsigned m = 0; m <= horizon; ++m) out.emplace_back(series.coeff(m));
    return out;
}

LeadingTerm mun_sym_leading(const Int& pn, unsigned d, unsigned n, unsigned m) {
    if (pn < 1) throw InvalidInput("mun_sym_leading needs a positive plurigenus");
    if (n == 0 || d == 0) throw InvalidInput("mun_sym_leading needs n >= 1 and d >= 1");
    if ((static_cast<unsigned long long>(n) * d) % 2 != 0)
        throw OddProduct("leading term needs n*d even; got n=" + std::to_string(n) +
                         ", d=" + std::to_string(d));
    return LeadingTerm{static_cast<std::size_t>(m) * d, sym_dim(pn, m)};
}

namespace {

struct Cycle {
    unsigned length;
};

std::vector<Cycle> cycle_type(const std::vector<unsigned>& perm) {
    std::vector<Cycle> cycles;
    std::vector<bool> seen(perm.size(), false);
    for (unsigned start = 0; start < perm.size(); ++start) {
        if (seen[start]) continue;
        unsigned len = 0;
        for (unsigned i = start; !seen[i]; i = perm[i]) {
            seen[i] = true;
            ++len;
        }
        cycles.push_back(Cycle{len});
    }
    return cycles;
}

}  // namespace

Int invariants_dim_bruteforce(const GradedElement& dims, unsigned m, unsigned j) {
    unsigned long total = 0;
    std::vector<unsigned> basis_degrees;  // one entry per basis vector
    for (const auto& [p, v] : dims.dims()) {
        if (v < 0) throw NegativeDimension("invariants oracle needs honest dimensions");
        total += v.get_ui();
        for (Int k = 0; k < v; ++k) basis_degrees.push_back(p);
    }
    if (total > 4) throw SizeGuardExceeded("oracle limit: total dimension <= 4");
    if (m > 5) throw SizeGuardExceeded("oracle limit: tensor power m <= 5");
    double tuples = 1;
    for (unsigned i = 0; i < m; ++i) tuples *= static_cast<double>(std::max<unsigned long>(total, 1));
    if (tuples > 1e6) throw SizeGuardExceeded("oracle limit: more than 10^6 basis tuples");
    if (m == 0) return j == 0 ? Int(1) : Int(0);

    std::vector<unsigned> perm(m);
    std::iota(perm.begin(), perm.end(), 0u);
    Int accum = 0;
    do {
        std::vector<Cycle> cycles = cycle_type(perm);
        // Assign one basis vector to each cycle; a cycle of length c carrying
        // a vector of degree p contributes degree c*p and sign (-1)^{p(c-1)}.
        std::vector<std::size_t> choice(cycles.size(), 0);
        if (basis_degrees.empty()) continue;
        while (true) {
            unsigned long long degree = 0;
            int sign = 1;
            for (std::size_t c = 0; c < cycles.size(); ++c) {
                unsigned p = basis_degrees[choice[c]];
                degree += static_cast<unsigned long long>(cycles[c].length) * p;
                if (p % 2 == 1 && (cycles[c].length - 1) % 2 == 1) sign = -sign;
            }
            if (degree == j) accum += sign;
            std::size_t bump = 0;
            while (bump < choice.size() && ++choice[bump] == basis_degrees.size()) {
                choice[bump] = 0;
                ++bump;
            }
            if (bump == choice.size()) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    Int order = factorial(m);
    Int result = accum / order;
    if (result * order != accum) throw Error("trace average is not integral");
    return result;
}

std::optional<Witness> distinguish_sym_powers(const HodgeData& h, unsigned m, unsigned l) {
    h.validate();
    if (m == l) throw InvalidInput("distinguish_sym_powers needs m != l");

    for (const auto& [n, pn] : h.plurigenera) {
        if (pn <= 0) continue;
        // A positive plurigenus separates every pair: the leading degrees
        // m*dim and l*dim differ. Doubling the index keeps n*dim even
        // (sections can be squared), and the doubled plurigenus is still
        // positive even when not listed explicitly.
        unsigned k = (static_cast<unsigned long long>(n) * h.dim) % 2 == 0 ? n : 2 * n;
        auto it = h.plurigenera.find(k);
        Int pk = it != h.plurigenera.end() && it->second > 0 ? it->second : Int(1);
        LeadingTerm top_m = mun_sym_leading(pk, h.dim, k, m);
        LeadingTerm top_l = mun_sym_leading(pk, h.dim, k, l);
        return Witness{k, top_m.degree, top_l.degree, 'a'};
    }

    unsigned big = std::max(m, l), small = std::min(m, l);
    for (unsigned i = 1; 2 * i <= h.dim; ++i) {
        if (h.h0[2 * i] <= 0) continue;
        if (static_cast<unsigned long long>(big) * 2 * i >
            static_cast<unsigned long long>(small) * h.dim) {
            std::size_t deg_m = mu1_sym(h, m).degree();
            std::size_t deg_l = mu1_sym(h, l).degree();
            return Witness{1, deg_m, deg_l, 'b'};
        }
    }
    return std::nullopt;
}

}  // namespace motivic
