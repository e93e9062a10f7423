#include "motivic/series.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace motivic {

TruncatedSeries<Int> exp_from_log_counts(const std::vector<Int>& counts, unsigned horizon) {
    if (static_cast<std::size_t>(horizon) > counts.size())
        throw InvalidInput("exp_from_log_counts: horizon " + std::to_string(horizon) +
                           " exceeds the " + std::to_string(counts.size()) + " provided counts");
    // With E = exp(L) and L = sum counts[m-1] t^m / m, comparing E' = L'E
    // coefficientwise gives n e_n = sum_{k=1}^{n} counts[k-1] e_{n-k}.
    std::vector<Rat> e(static_cast<std::size_t>(horizon) + 1);
    e[0] = 1;
    for (unsigned n = 1; n <= horizon; ++n) {
        Rat acc(0);
        for (unsigned k = 1; k <= n; ++k) acc += Rat(counts[k - 1]) * e[n - k];
        e[n] = acc / n;
    }
    std::vector<Int> demoted(e.size());
    for (unsigned n = 0; n <= horizon; ++n) {
        if (!is_integral(e[n]))
            throw NonIntegralCoefficient("coefficient of t^" + std::to_string(n) +
                                         " is " + e[n].get_str() + ", not an integer");
        demoted[n] = e[n].get_num();
    }
    return TruncatedSeries<Int>::from_coeffs(std::move(demoted));
}

namespace {

// Any exact solution of the augmented system, free unknowns pinned to zero.
std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> rows,
                                             std::size_t unknowns) {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < unknowns && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        Rat inv = Rat(1) / rows[rank][col];
        for (std::size_t c = col; c <= unknowns; ++c) rows[rank][c] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Rat factor = rows[r][col];
            for (std::size_t c = col; c <= unknowns; ++c)
                rows[r][c] -= factor * rows[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (rows[r][unknowns] != 0) return std::nullopt;
    std::vector<Rat> solution(unknowns, Rat(0));
    for (std::size_t r = 0; r < rank; ++r) solution[pivot_col[r]] = rows[r][unknowns];
    return solution;
}

}  // namespace

std::optional<RationalForm<Rat>> fit_rational_form(const std::vector<Rat>& coeffs,
                                                   unsigned max_deg) {
    if (coeffs.empty()) throw InvalidInput("fit_rational_form: empty coefficient list");
    const std::size_t count = coeffs.size();
    // Denominator g with g_0 = 1 and deg g = den_deg fits iff the convolution
    // (g * coeffs) vanishes in every degree above max_deg, which is a linear
    // system in g_1..g_{den_deg} over the Hankel slices of the data.
    for (unsigned den_deg = 0; den_deg <= max_deg; ++den_deg) {
        std::vector<std::vector<Rat>> rows;
        for (std::size_t j = static_cast<std::size_t>(max_deg) + 1; j < count; ++j) {
            std::vector<Rat> row(den_deg + 1, Rat(0));
            for (unsigned i = 1; i <= den_deg; ++i)
                if (j >= i) row[i - 1] = coeffs[j - i];
            row[den_deg] = -coeffs[j];
            rows.push_back(std::move(row));
        }
        auto solution = solve_linear(std::move(rows), den_deg);
        if (!solution) continue;
        std::vector<Rat> den(den_deg + 1, Rat(0));
        den[0] = 1;
        for (unsigned i = 1; i <= den_deg; ++i) den[i] = (*solution)[i - 1];
        std::vector<Rat> num(std::min<std::size_t>(count, max_deg + 1), Rat(0));
        for (std::size_t j = 0; j < count; ++j) {
            Rat acc(0);
            for (unsigned i = 0; i <= den_deg && i <= j; ++i) acc += den[i] * coeffs[j - i];
            if (j < num.size()) {
                num[j] = acc;
            } else if (acc != 0) {
                num.clear();  // solver artifact; this denominator does not fit
                break;
            }
        }
        if (num.empty()) continue;
        while (num.size() > 1 && num.back() == 0) num.pop_back();
        RationalForm<Rat> form{std::move(num), std::move(den)};
        // Re-expansion guards against any slip in the elimination above.
        TruncatedSeries<Rat> check = expand(form, static_cast<unsigned>(count - 1));
        for (std::size_t j = 0; j < count; ++j)
            if (!(check.coeff(static_cast<unsigned>(j)) == coeffs[j])) return std::nullopt;
        return form;
    }
    return std::nullopt;
}

}  // namespace motivic
