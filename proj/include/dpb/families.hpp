#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dpb/bipoly.hpp"
#include "dpb/series.hpp"

namespace dpb {

enum class Family {
    bernoulli,        ///< B_n(x):              t/(e^t-1) e^{xt}
    carlitz,          ///< beta_{n,lambda}(x):  t/((1+lt)^{1/l}-1) (1+lt)^{x/l}
    daehee_type,      ///< b_{n,lambda}(x):     (1/l)log(1+lt)/((1+lt)^{1/l}-1) (1+lt)^{x/l}
    poly_bernoulli,   ///< B_n^(k)(x):          Li_k(1-e^{-t})/(1-e^{-t}) e^{xt}
    fully_degenerate, ///< beta_{n,lambda}^(k)(x)
};

std::string_view family_name(Family f);
/// Accepts the CLI spellings: bernoulli, carlitz, daehee, polybernoulli, fdpb.
std::optional<Family> parse_family(std::string_view name);
bool has_order_parameter(Family f);

/// Where the polynomial is looked at: x = 0, symbolic x, or x = value.
struct Argument {
    enum class Kind { number, polynomial, value };

    Kind kind = Kind::number;
    Rat at;

    static Argument number() { return {Kind::number, {}}; }
    static Argument polynomial() { return {Kind::polynomial, {}}; }
    static Argument value(const Rat& r) { return {Kind::value, r}; }
};

struct FamilySpec {
    Family family = Family::fully_degenerate;
    std::optional<int> k;
    Argument arg;
};

struct FamilyValue {
    int n = 0;
    BiPoly value;
};

/// Generating function of a family as a series in t, known to at least t^order.
/// `with_x` keeps the (1+lambda t)^{x/lambda} (or e^{xt}) factor.
Series family_series(Family family, std::optional<int> k, bool with_x, std::size_t order);

/// Rows n = 0..n_max of the family at the requested argument, all taken from
/// one generating function. Throws std::invalid_argument when a poly family
/// lacks k.
std::vector<FamilyValue> family_values(const FamilySpec& spec, int n_max);

BiPoly bernoulli_poly(int n, const Argument& arg);
BiPoly carlitz_beta(int n, const Argument& arg);
BiPoly daehee_type_b(int n, const Argument& arg);
BiPoly classical_poly_bernoulli(int n, int k, const Argument& arg);
/// EGF coefficient of the fully degenerate generating function, including the
/// (1+lambda t)^{x/lambda} factor when arg asks for a polynomial.
BiPoly fdpb_gf(int n, int k, const Argument& arg);

/// beta_{0..n_max,lambda}^(k) from the generating function.
std::vector<BiPoly> fdpb_numbers(int k, int n_max);

/// sum_l binom(n,l) (x|lambda)_{n-l} numbers[l]: the polynomial determined
/// by a table of numbers under the addition law.
BiPoly expand_in_x(const std::vector<BiPoly>& numbers, int n);
/// Same expansion around an arbitrary shift y instead of x.
BiPoly expand_with_shift(const std::vector<BiPoly>& values_at_x, const BiPoly& y, int n);

/// beta_{n,lambda}^(k)(x) produced by the addition-law expansion.
BiPoly fdpb_polynomial(int n, int k);
std::vector<BiPoly> fdpb_polynomials(int k, int n_max);

/// Double Stirling sum for beta_{n,lambda}^(k); a polynomial in lambda.
BiPoly fdpb_closed(int n, int k);
/// The negative-index form: returns beta_{n,lambda}^(-k).
BiPoly fdpb_negative_closed(int n, int k);
/// lambda = 0 value of the double sum: sum_m (-1)^{m+n} m!/(m+1)^k S2(n,m).
Rat poly_bernoulli_closed(int n, int k);

/// Builds the generating function of beta^(k)_{n,lambda} (x = 0) by k-1
/// nested formal integrations. Requires k >= 2 (std::invalid_argument).
Series fdpb_iterated_integral(int k, std::size_t order);

/// d/dx beta_{n,lambda}^(k)(x) as a sum of omit-one-factor products.
BiPoly fdpb_x_derivative(int n, int k);

/// int_0^1 (x|lambda)_n dx by the Bernoulli-numbers-of-the-second-kind sum.
BiPoly falling_unit_integral(int n);

/// Index convention for the triple sum of the unit-interval integral.
enum class IntegralReading {
    reindexed, ///< beta_{n-l} paired with int (x|lambda)_l; matches direct integration
    literal,   ///< beta_l paired with int (x|lambda)_l
};

BiPoly integral_unit_interval_sum(int n, int k, IntegralReading reading = IntegralReading::reindexed);
/// Same triple sum over a precomputed table numbers[0..n] of beta^(k)_{j,lambda}.
BiPoly integral_unit_interval_sum(const std::vector<BiPoly>& numbers, int n, IntegralReading reading);

/// int_0^1 beta_{n,lambda}^(k)(u) du computed by direct integration and by the
/// triple sum; throws RouteMismatch when they differ.
BiPoly integral_unit_interval(int n, int k, IntegralReading reading = IntegralReading::reindexed);

namespace detail {

/// Double sum of fdpb_closed with a caller-supplied sign (-1)^{sign_exponent(m,l)}.
/// Used for fault-injection tests of the verification harness.
BiPoly fdpb_closed_signed(int n, int k, int (*sign_exponent)(int m, int l));

} // namespace detail

} // namespace dpb
