#pragma once

#include <vector>

#include "dpb/bipoly.hpp"
#include "dpb/series.hpp"

namespace dpb {

/// A series f(t) acting on polynomials in x through <f | x^n> = n! [t^n] f.
class Functional {
public:
    explicit Functional(Series f) : f_(std::move(f)) {}

    const Series& series() const { return f_; }

    /// <f | p>. The coefficients of p in x may involve lambda.
    /// Throws OrderExceeded if f is not known up to deg_x(p).
    BiPoly operator()(const BiPoly& p) const;

private:
    Series f_;
};

inline BiPoly pair(const Series& f, const BiPoly& p) { return Functional(f)(p); }

/// e^{yt} for a lambda-only y; pairs as evaluation p -> p(y).
Series evaluation_series(const BiPoly& y, std::size_t order);
/// (e^{yt} - 1)/t; pairs as integration over [0, y].
Series integration_series(const BiPoly& y, std::size_t order);

/// Action of e^{yt} on a polynomial: p(x) -> p(x + y).
BiPoly shift_operator(const BiPoly& p, const BiPoly& y);
/// Action of (e^{lambda t} - 1)/lambda: sum_{j>=1} lambda^{j-1} p^{(j)}(x)/j!,
/// i.e. (p(x + lambda) - p(x))/lambda without dividing by lambda.
BiPoly lambda_difference_operator(const BiPoly& p);

/// (1 - e^{-t}) / Li_k(1 - e^{-t}), known to t^order.
Series sheffer_invertible_series(int k, std::size_t order);

/// <g(t) f(t)^m | p> for the Sheffer pair of beta_{n,lambda}^(k)(x):
/// g = (1 - e^{-t})/Li_k(1 - e^{-t}), f = (e^{lambda t} - 1)/lambda.
BiPoly sheffer_pairing(int k, int m, const BiPoly& p);

/// p(x) = sum_m coefficients[m] * beta_{m,lambda}^(k)(x).
struct BasisExpansion {
    int n = 0;
    int k = 0;
    std::vector<BiPoly> coefficients;

    friend bool operator==(const BasisExpansion&, const BasisExpansion&) = default;
};

/// Coefficients a_m = <g f^m | p>/m!.
BasisExpansion sheffer_expand_functional(const BiPoly& p, int k);
/// Coefficients by back substitution against the monic basis.
BasisExpansion sheffer_expand_triangular(const BiPoly& p, int k);
/// Runs both routes; throws RouteMismatch when they disagree.
BasisExpansion sheffer_expand(const BiPoly& p, int k);

/// sum_m coefficients[m] * beta_{m,lambda}^(k)(x).
BiPoly reconstruct(const BasisExpansion& e);

struct Connection {
    BiPoly assembled; ///< sum_m lambda^{n-m} S2(n,m) beta_{m,lambda}^(k)(x)
    BiPoly expected;  ///< B_n^(k)(x)
    bool lambda_free = false;
    bool equal = false;
};

/// Expresses B_n^(k)(x) in the fully degenerate basis with the Stirling
/// coefficients lambda^{n-m} S2(n,m).
Connection eq60_connection(int n, int k);

} // namespace dpb
