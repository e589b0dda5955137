#include "dpb/families.hpp"

#include <stdexcept>

#include "dpb/error.hpp"
#include "dpb/sequences.hpp"

namespace dpb {

std::string_view family_name(Family f)
{
    switch (f) {
    case Family::bernoulli:
        return "bernoulli";
    case Family::carlitz:
        return "carlitz";
    case Family::daehee_type:
        return "daehee";
    case Family::poly_bernoulli:
        return "polybernoulli";
    case Family::fully_degenerate:
        return "fdpb";
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name)
{
    for (Family f : {Family::bernoulli, Family::carlitz, Family::daehee_type, Family::poly_bernoulli,
                     Family::fully_degenerate}) {
        if (family_name(f) == name) {
            return f;
        }
    }
    return std::nullopt;
}

bool has_order_parameter(Family f) { return f == Family::poly_bernoulli || f == Family::fully_degenerate; }

namespace {

// Guard coefficients beyond the highest requested index.
constexpr std::size_t kGuard = 2;

Series minus_one(Series s)
{
    s[0] -= BiPoly(1);
    return s;
}

// 1 - (1+lambda t)^{-1/lambda}
Series degenerate_one_minus(std::size_t order) { return -minus_one(degenerate_pow(BiPoly(-1), order)); }

// (1+lambda t)^{1/lambda} - 1
Series degenerate_exp_minus_one(std::size_t order) { return minus_one(degenerate_pow(BiPoly(1), order)); }

Series build_series(Family family, int k, bool with_x, std::size_t order)
{
    const std::size_t work = order + kGuard;
    Series base(0);
    bool degenerate = true;
    switch (family) {
    case Family::bernoulli:
        base = series_div(Series::t(work), minus_one(exp_linear(BiPoly(1), work)));
        degenerate = false;
        break;
    case Family::carlitz:
        base = series_div(Series::t(work), degenerate_exp_minus_one(work));
        break;
    case Family::daehee_type:
        base = series_div(degenerate_log(work), degenerate_exp_minus_one(work));
        break;
    case Family::poly_bernoulli: {
        Series u = -minus_one(exp_linear(BiPoly(-1), work));
        base = series_div(polylog_series(k, u), u);
        degenerate = false;
        break;
    }
    case Family::fully_degenerate: {
        Series u = degenerate_one_minus(work);
        base = series_div(polylog_series(k, u), u);
        break;
    }
    }
    if (with_x) {
        Series shift = degenerate ? degenerate_pow(BiPoly::x(), work) : exp_linear(BiPoly::x(), work);
        base = base * shift;
    }
    return base.truncated(order);
}

BiPoly apply_argument(const BiPoly& poly, const Argument& arg)
{
    switch (arg.kind) {
    case Argument::Kind::number:
        return eval_at(poly, std::nullopt, Rat(0));
    case Argument::Kind::polynomial:
        return poly;
    case Argument::Kind::value:
        return eval_at(poly, std::nullopt, arg.at);
    }
    return poly;
}

void require_index(int n)
{
    if (n < 0) {
        throw IndexOutOfRange("family index must be nonnegative, got " + std::to_string(n));
    }
}

BiPoly single(Family family, int k, int n, const Argument& arg)
{
    require_index(n);
    bool with_x = arg.kind != Argument::Kind::number;
    Series s = build_series(family, k, with_x, static_cast<std::size_t>(n));
    return apply_argument(egf_coeff(s, static_cast<std::size_t>(n)), arg);
}

BiPoly lambda_pow(const Rat& c, int d) { return BiPoly::monomial(c, static_cast<std::uint32_t>(d), 0); }

} // namespace

Series family_series(Family family, std::optional<int> k, bool with_x, std::size_t order)
{
    if (has_order_parameter(family) && !k) {
        throw std::invalid_argument(std::string(family_name(family)) + " requires k");
    }
    return build_series(family, k.value_or(0), with_x, order);
}

std::vector<FamilyValue> family_values(const FamilySpec& spec, int n_max)
{
    require_index(n_max);
    bool with_x = spec.arg.kind != Argument::Kind::number;
    Series s = family_series(spec.family, spec.k, with_x, static_cast<std::size_t>(n_max));
    std::vector<FamilyValue> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        out.push_back({n, apply_argument(egf_coeff(s, static_cast<std::size_t>(n)), spec.arg)});
    }
    return out;
}

BiPoly bernoulli_poly(int n, const Argument& arg) { return single(Family::bernoulli, 0, n, arg); }
BiPoly carlitz_beta(int n, const Argument& arg) { return single(Family::carlitz, 0, n, arg); }
BiPoly daehee_type_b(int n, const Argument& arg) { return single(Family::daehee_type, 0, n, arg); }

BiPoly classical_poly_bernoulli(int n, int k, const Argument& arg)
{
    return single(Family::poly_bernoulli, k, n, arg);
}

BiPoly fdpb_gf(int n, int k, const Argument& arg) { return single(Family::fully_degenerate, k, n, arg); }

std::vector<BiPoly> fdpb_numbers(int k, int n_max)
{
    require_index(n_max);
    Series s = build_series(Family::fully_degenerate, k, false, static_cast<std::size_t>(n_max));
    std::vector<BiPoly> out;
    for (int n = 0; n <= n_max; ++n) {
        out.push_back(egf_coeff(s, static_cast<std::size_t>(n)));
    }
    return out;
}

BiPoly expand_with_shift(const std::vector<BiPoly>& values_at_x, const BiPoly& y, int n)
{
    require_index(n);
    if (values_at_x.size() <= static_cast<std::size_t>(n)) {
        throw IndexOutOfRange("expansion needs values up to index " + std::to_string(n));
    }
    BiPoly out;
    for (int l = 0; l <= n; ++l) {
        out += gen_falling(y, n - l) * values_at_x[static_cast<std::size_t>(l)]
               * binomial(static_cast<unsigned>(n), static_cast<unsigned>(l));
    }
    return out;
}

BiPoly expand_in_x(const std::vector<BiPoly>& numbers, int n) { return expand_with_shift(numbers, BiPoly::x(), n); }

BiPoly fdpb_polynomial(int n, int k)
{
    require_index(n);
    return expand_in_x(fdpb_numbers(k, n), n);
}

std::vector<BiPoly> fdpb_polynomials(int k, int n_max)
{
    std::vector<BiPoly> numbers = fdpb_numbers(k, n_max);
    std::vector<BiPoly> out;
    for (int n = 0; n <= n_max; ++n) {
        out.push_back(expand_in_x(numbers, n));
    }
    return out;
}

namespace detail {

BiPoly fdpb_closed_signed(int n, int k, int (*sign_exponent)(int m, int l))
{
    require_index(n);
    BiPoly out;
    for (int l = 0; l <= n; ++l) {
        const Rat s1 = stirling(StirlingKind::first_signed, n, l);
        if (s1.is_zero()) {
            continue;
        }
        Rat inner;
        for (int m = 0; m <= l; ++m) {
            Rat term = factorial(static_cast<unsigned>(m)) * pow(Rat(m + 1), -k)
                       * stirling(StirlingKind::second, l, m);
            inner += sign_exponent(m, l) % 2 == 0 ? term : -term;
        }
        out += lambda_pow(inner * s1, n - l);
    }
    return out;
}

} // namespace detail

BiPoly fdpb_closed(int n, int k)
{
    return detail::fdpb_closed_signed(n, k, [](int m, int l) { return m + l; });
}

BiPoly fdpb_negative_closed(int n, int k)
{
    require_index(n);
    BiPoly out;
    for (int m = 0; m <= n; ++m) {
        Rat inner;
        for (int j = 0; j <= m; ++j) {
            Rat term = factorial(static_cast<unsigned>(j)) * pow(Rat(j + 1), k) * stirling(StirlingKind::second, m, j);
            inner += (j + m) % 2 == 0 ? term : -term;
        }
        out += lambda_pow(inner * stirling(StirlingKind::first_signed, n, m), n - m);
    }
    return out;
}

Rat poly_bernoulli_closed(int n, int k)
{
    require_index(n);
    Rat out;
    for (int m = 0; m <= n; ++m) {
        Rat term = factorial(static_cast<unsigned>(m)) * pow(Rat(m + 1), -k) * stirling(StirlingKind::second, n, m);
        out += (m + n) % 2 == 0 ? term : -term;
    }
    return out;
}

Series fdpb_iterated_integral(int k, std::size_t order)
{
    if (k < 2) {
        throw std::invalid_argument("iterated-integral route needs k >= 2, got " + std::to_string(k));
    }
    const std::size_t work = order + 1;
    const Series one_plus_lt = Series::constant(BiPoly(1), work) + Series::t(work) * BiPoly::lambda();
    const Series denom = degenerate_exp_minus_one(work);
    // The kernel 1/(((1+lt)^{1/l} - 1)(1+lt)) is applied by division.
    const Series kernel_denom = denom * one_plus_lt;

    Series f = series_div(degenerate_log(work), kernel_denom);
    for (int i = 0; i < k - 1; ++i) {
        f = series_integrate(f);
        if (i + 1 < k - 1) {
            f = series_div(f, kernel_denom);
        }
    }
    // f is now Li_k(1 - (1+lt)^{-1/l}); divide by its argument.
    Series out = series_div(f * degenerate_pow(BiPoly(1), work), denom);
    return out.truncated(order);
}

BiPoly fdpb_x_derivative(int n, int k)
{
    require_index(n);
    std::vector<BiPoly> numbers = fdpb_numbers(k, n);
    BiPoly out;
    for (int l = 0; l <= n; ++l) {
        const int len = n - l;
        BiPoly derivative;
        for (int j = 0; j < len; ++j) {
            BiPoly prod(1);
            for (int i = 0; i < len; ++i) {
                if (i != j) {
                    prod *= BiPoly::x() - lambda_pow(Rat(i), 1);
                }
            }
            derivative += prod;
        }
        out += derivative * numbers[static_cast<std::size_t>(l)]
               * binomial(static_cast<unsigned>(n), static_cast<unsigned>(l));
    }
    return out;
}

BiPoly falling_unit_integral(int n)
{
    require_index(n);
    std::vector<Rat> b2 = bernoulli_second_kind_numbers(n);
    BiPoly out;
    for (int l = 0; l <= n; ++l) {
        out += lambda_pow(b2[static_cast<std::size_t>(n - l)], n - l) * gen_falling(BiPoly(1), l + 1)
               * (binomial(static_cast<unsigned>(n), static_cast<unsigned>(l)) / Rat(l + 1));
    }
    return out;
}

BiPoly integral_unit_interval_sum(int n, int k, IntegralReading reading)
{
    require_index(n);
    return integral_unit_interval_sum(fdpb_numbers(k, n), n, reading);
}

BiPoly integral_unit_interval_sum(const std::vector<BiPoly>& numbers, int n, IntegralReading reading)
{
    require_index(n);
    if (numbers.size() <= static_cast<std::size_t>(n)) {
        throw IndexOutOfRange("triple sum needs numbers up to index " + std::to_string(n));
    }
    std::vector<Rat> b2 = bernoulli_second_kind_numbers(n);
    BiPoly out;
    for (int l = 0; l <= n; ++l) {
        const BiPoly& beta = numbers[static_cast<std::size_t>(reading == IntegralReading::reindexed ? n - l : l)];
        for (int m = 0; m <= l; ++m) {
            Rat c = binomial(static_cast<unsigned>(l), static_cast<unsigned>(m))
                    * binomial(static_cast<unsigned>(n), static_cast<unsigned>(l)) * b2[static_cast<std::size_t>(l - m)]
                    / Rat(m + 1);
            out += lambda_pow(c, l - m) * beta * gen_falling(BiPoly(1), m + 1);
        }
    }
    return out;
}

BiPoly integral_unit_interval(int n, int k, IntegralReading reading)
{
    BiPoly direct = integrate_x_unit(fdpb_polynomial(n, k));
    BiPoly summed = integral_unit_interval_sum(n, k, reading);
    if (direct != summed) {
        throw RouteMismatch("unit-interval integral: direct integration and triple sum differ at n="
                                + std::to_string(n) + ", k=" + std::to_string(k),
                            {canonical_string(direct)}, {canonical_string(summed)});
    }
    return direct;
}

} // namespace dpb
