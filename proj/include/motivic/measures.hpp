#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motivic/errors.hpp"
#include "motivic/graded.hpp"
#include "motivic/zm.hpp"

namespace motivic {

// Hodge-theoretic input for a smooth projective variety: its dimension,
// the dimensions h0[i] of the spaces of global i-forms (h0[0] = 1 for a
// connected variety), and optionally plurigenera indexed by the power of
// the canonical bundle.
struct HodgeData {
    unsigned dim = 0;
    std::vector<Int> h0;
    std::map<unsigned, Int> plurigenera;
    std::string name;

    void validate() const;
};

// The polynomial sum_i h0[i] s^i with constant term h0[0] = 1, recording
// global-form dimensions with their form degree as the grading.
MElement mu1(const HodgeData& h);

// Numerical data of a product: dimensions add, form spaces convolve
// (Kuenneth on degree-zero cohomology), plurigenera multiply where both
// factors provide them.
HodgeData product_hodge(const HodgeData& a, const HodgeData& b);

// The degree-one measure of the m-th symmetric power: global i-forms on
// the symmetric power are the symmetric-group invariants of the m-fold
// tensor product, which is exactly lambda^m of mu1 in the super grading.
MElement mu1_sym(const HodgeData& h, unsigned m);

// Coefficients mu1_sym(h, 0 .. horizon) computed from a single series.
std::vector<MElement> mu1_sym_sequence(const HodgeData& h, unsigned horizon);

struct LeadingTerm {
    std::size_t degree;
    Int coefficient;
};

// Top term of the degree-n measure of the m-th symmetric power of a
// d-dimensional variety with n-th plurigenus pn >= 1: pluricanonical
// sections of the symmetric power pull back m-fold products of sections,
// giving degree m*d with coefficient sym_dim(pn, m). Requires n*d even so
// the sections behave symmetrically; otherwise OddProduct.
LeadingTerm mun_sym_leading(const Int& pn, unsigned d, unsigned n, unsigned m);

// Independent ground truth for lambda^m: the dimension of the invariants
// of the symmetric group acting on the degree-j slice of the m-fold tensor
// power of a graded vector space, by direct enumeration.
//
// Averages the traces (1/m!) sum_sigma tr(sigma); the trace of sigma counts
// basis tuples constant on its cycles, each weighted by the sign picked up
// when a cycle of length c carries a degree-p vector: (-1)^{p (c-1)}.
//
// Guards: every dimension nonnegative, total dimension <= 4, m <= 5 and the
// enumeration at most 10^6 tuples; beyond that SizeGuardExceeded.
Int invariants_dim_bruteforce(const GradedElement& dims, unsigned m, unsigned j);

// Evidence that the m-th and l-th symmetric powers are not stably
// birational: a measure index k together with the distinct degrees of the
// corresponding measures of the two symmetric powers.
struct Witness {
    unsigned measure_index;
    std::size_t degree_m;
    std::size_t degree_l;
    char part;  // 'a' = plurigenus route, 'b' = even-form route
};

// Tries the plurigenus route first (any positive plurigenus works for all
// m != l; the index is doubled when n*dim is odd), then the even-form
// route (some h0[2i] > 0 with max(m,l) * 2i > min(m,l) * dim).
std::optional<Witness> distinguish_sym_powers(const HodgeData& h, unsigned m, unsigned l);

}  // namespace motivic
