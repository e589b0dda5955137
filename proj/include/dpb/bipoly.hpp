#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "dpb/rat.hpp"

namespace dpb {

/// Exponent pair of a monomial lambda^lambda_deg * x^x_deg.
struct Exponent {
    std::uint32_t x_deg = 0;
    std::uint32_t lambda_deg = 0;

    friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Element of Q[lambda, x].
///
/// Sparse storage keyed by (x-degree, lambda-degree); zero coefficients are
/// never stored, so structural equality coincides with polynomial equality.
/// In text the parameter lambda is written as the ASCII token "L".
class BiPoly {
public:
    using Terms = std::map<Exponent, Rat>;

    BiPoly() = default;
    BiPoly(const Rat& c); // NOLINT: constants embed implicitly
    BiPoly(long c) : BiPoly(Rat(c)) {} // NOLINT

    static BiPoly monomial(const Rat& c, std::uint32_t lambda_deg, std::uint32_t x_deg);
    static BiPoly x() { return monomial(1, 0, 1); }
    static BiPoly lambda() { return monomial(1, 1, 0); }

    /// Inverse of canonical_string(); also accepts "-" signs, spaces and
    /// factors in any order. Throws ParseError on malformed input.
    static BiPoly parse(std::string_view text);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_lambda_free() const;
    bool is_x_free() const;

    /// Degree in x (0 for the zero polynomial).
    std::uint32_t x_degree() const;
    std::uint32_t lambda_degree() const;

    Rat coefficient(std::uint32_t lambda_deg, std::uint32_t x_deg) const;
    /// Coefficient of x^i as a polynomial in lambda alone.
    BiPoly x_coefficient(std::uint32_t i) const;
    /// Value of a constant polynomial; nullopt if it depends on lambda or x.
    std::optional<Rat> constant_value() const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
    BiPoly& operator*=(const Rat& c);

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(BiPoly a, const Rat& c) { return a *= c; }
    friend BiPoly operator*(const Rat& c, BiPoly a) { return a *= c; }
    friend BiPoly operator*(BiPoly a, long c) { return a *= Rat(c); }
    friend BiPoly operator*(long c, BiPoly a) { return a *= Rat(c); }
    BiPoly operator-() const;

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    /// Adds c * lambda^l * x^i in place.
    void add_term(const Rat& c, std::uint32_t lambda_deg, std::uint32_t x_deg);

private:
    Terms terms_;
};

BiPoly pow(const BiPoly& base, unsigned exponent);

/// Substitutes lambda and/or x by rational values.
BiPoly eval_at(const BiPoly& p, const std::optional<Rat>& lambda_val, const std::optional<Rat>& x_val);

/// p(q): replaces x by the polynomial q (which may involve lambda and x).
BiPoly substitute_x(const BiPoly& p, const BiPoly& q);

/// d/dx.
BiPoly derivative_x(const BiPoly& p);
/// Antiderivative in x with zero constant term.
BiPoly antiderivative_x(const BiPoly& p);
/// Definite integral over x in [0, 1]; the result is lambda-only.
BiPoly integrate_x_unit(const BiPoly& p);

/// Deterministic text rendering, e.g. "x^2 + (-1/2)*L*x + 1/6".
std::string canonical_string(const BiPoly& p);

inline std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << canonical_string(p); }

} // namespace dpb
