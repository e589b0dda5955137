#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dpb/bipoly.hpp"

namespace dpb {

/// Truncated power series in t with Q[lambda, x] coefficients.
///
/// Coefficients are stored in ordinary form (f = sum a_n t^n) for
/// n = 0..order(); anything beyond order() is unknown. Results of binary
/// operations carry the smaller of the operand orders, and division or
/// composition may lower it further, so a series never claims a coefficient
/// that was not exactly determined.
class Series {
public:
    /// The zero series known up to t^order.
    explicit Series(std::size_t order);
    /// Takes ownership of coefficients a_0..a_N; must be non-empty.
    explicit Series(std::vector<BiPoly> coeffs);

    /// 1 + 0 t + ... up to t^order.
    static Series constant(const BiPoly& c, std::size_t order);
    /// The series t.
    static Series t(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    /// Index of the first nonzero coefficient, order()+1 when all vanish.
    std::size_t valuation() const;

    const BiPoly& operator[](std::size_t n) const { return coeffs_[n]; }
    BiPoly& operator[](std::size_t n) { return coeffs_[n]; }
    const std::vector<BiPoly>& coeffs() const { return coeffs_; }

    /// Copy limited to t^order (order must not exceed the current one).
    Series truncated(std::size_t order) const;

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const BiPoly& c);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(Series a, const BiPoly& c) { return a *= c; }
    friend Series operator*(const BiPoly& c, Series a) { return a *= c; }
    Series operator-() const;

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<BiPoly> coeffs_;
};

/// q with q * g = f, known up to order min(N_f, N_g) - valuation(g).
/// Throws ValuationMismatch if valuation(f) < valuation(g) and
/// NonUnitLeadingCoefficient unless g's leading coefficient is a nonzero
/// rational constant.
Series series_div(const Series& f, const Series& g);

/// outer(inner(t)). Throws NonzeroConstantTerm unless inner(0) == 0.
Series series_compose(const Series& outer, const Series& inner);

/// Truncated logarithm; requires f(0) == 1 (BadConstantTerm otherwise).
Series series_log(const Series& f);
/// Truncated exponential; requires f(0) == 0 (BadConstantTerm otherwise).
Series series_exp(const Series& f);

/// Formal antiderivative from 0; the result is known to one more order.
Series series_integrate(const Series& f);
Series series_derivative(const Series& f);

/// f^e by repeated squaring.
Series series_pow(const Series& f, unsigned e);

// Closed-form builders. None of them divides by lambda, so every coefficient
// stays in Q[lambda, x].

/// (1 + lambda t)^(mu/lambda): EGF coefficient n is (mu|lambda)_n.
Series degenerate_pow(const BiPoly& mu, std::size_t order);
/// (1/lambda) log(1 + lambda t) = sum (-1)^(n-1) lambda^(n-1) t^n / n.
Series degenerate_log(std::size_t order);
/// (e^(lambda t) - 1)/lambda = sum_{n>=1} lambda^(n-1) t^n / n!.
Series degenerate_delta(std::size_t order);
/// exp(c t) for a coefficient c.
Series exp_linear(const BiPoly& c, std::size_t order);

/// n! * a_n. Throws OrderExceeded if n > order().
BiPoly egf_coeff(const Series& f, std::size_t n);
/// Builds a series from EGF coefficients c_n (a_n = c_n / n!).
Series from_egf(const std::vector<BiPoly>& egf);

/// ["a_0", "a_1", ...] using canonical_string.
std::vector<std::string> render(const Series& f);

} // namespace dpb
