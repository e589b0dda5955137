#pragma once

#include <vector>

#include "dpb/bipoly.hpp"
#include "dpb/rat.hpp"
#include "dpb/series.hpp"

namespace dpb {

enum class StirlingKind {
    first_signed, ///< (x)_n = sum_l S1(n,l) x^l
    second,       ///< x^n = sum_l S2(n,l) (x)_l
};

/// Triangle S(n, l), 0 <= l <= n <= n_max, filled by the usual recurrences.
class StirlingTable {
public:
    StirlingTable(StirlingKind kind, int n_max);

    StirlingKind kind() const { return kind_; }
    int n_max() const { return n_max_; }
    /// Throws IndexOutOfRange unless 0 <= l <= n <= n_max. Entries with
    /// l > n are zero by convention but still rejected here.
    const Rat& operator()(int n, int l) const;

private:
    StirlingKind kind_;
    int n_max_;
    std::vector<std::vector<Rat>> rows_;
};

/// Single Stirling number. Rejects l < 0, n < 0 and l > n with IndexOutOfRange.
Rat stirling(StirlingKind kind, int n, int l);

/// Zero when l > n or either index is negative; for use inside sums whose
/// bounds run past the triangle.
Rat stirling_or_zero(StirlingKind kind, int n, int l);

/// B_n, the EGF coefficients of t/(e^t - 1).
Rat bernoulli(int n);
/// b_n, the EGF coefficients of t/log(1+t).
Rat bernoulli_second_kind(int n);
std::vector<Rat> bernoulli_numbers(int n_max);
std::vector<Rat> bernoulli_second_kind_numbers(int n_max);

/// (mu|lambda)_n = mu (mu - lambda) ... (mu - (n-1) lambda).
BiPoly gen_falling(const BiPoly& mu, int n);

/// sum_{n>=1} inner^n / n^k truncated at inner's order; k may be any integer.
/// Throws NonzeroConstantTerm unless inner(0) == 0.
Series polylog_series(int k, const Series& inner);

} // namespace dpb
