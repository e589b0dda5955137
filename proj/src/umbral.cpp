#include "dpb/umbral.hpp"

#include <string>

#include "dpb/error.hpp"
#include "dpb/families.hpp"
#include "dpb/sequences.hpp"

namespace dpb {

BiPoly Functional::operator()(const BiPoly& p) const
{
    const std::uint32_t deg = p.x_degree();
    if (deg > f_.order()) {
        throw OrderExceeded("functional known to t^" + std::to_string(f_.order()) + " cannot act on degree "
                            + std::to_string(deg));
    }
    BiPoly out;
    for (std::uint32_t n = 0; n <= deg; ++n) {
        BiPoly c = p.x_coefficient(n);
        if (!c.is_zero()) {
            out += egf_coeff(f_, n) * c;
        }
    }
    return out;
}

Series evaluation_series(const BiPoly& y, std::size_t order) { return exp_linear(y, order); }

Series integration_series(const BiPoly& y, std::size_t order)
{
    // sum_k y^{k+1}/(k+1)! t^k
    Series s(order);
    BiPoly power = y;
    for (std::size_t k = 0; k <= order; ++k) {
        s[k] = power * (Rat(1) / factorial(static_cast<unsigned>(k) + 1));
        power *= y;
    }
    return s;
}

BiPoly shift_operator(const BiPoly& p, const BiPoly& y) { return substitute_x(p, BiPoly::x() + y); }

BiPoly lambda_difference_operator(const BiPoly& p)
{
    BiPoly out;
    BiPoly d = p;
    for (std::uint32_t j = 1; j <= p.x_degree(); ++j) {
        d = derivative_x(d);
        out += BiPoly::monomial(Rat(1) / factorial(j), j - 1, 0) * d;
    }
    return out;
}

Series sheffer_invertible_series(int k, std::size_t order)
{
    const std::size_t work = order + 1;
    Series u = -exp_linear(BiPoly(-1), work);
    u[0] += BiPoly(1);
    return series_div(u, polylog_series(k, u));
}

BiPoly sheffer_pairing(int k, int m, const BiPoly& p)
{
    const std::size_t order = std::max<std::size_t>(p.x_degree(), static_cast<std::size_t>(m));
    Series op = sheffer_invertible_series(k, order) * series_pow(degenerate_delta(order), static_cast<unsigned>(m));
    return pair(op, p);
}

BasisExpansion sheffer_expand_functional(const BiPoly& p, int k)
{
    const int n = static_cast<int>(p.x_degree());
    const auto order = static_cast<std::size_t>(n);
    const Series g = sheffer_invertible_series(k, order);
    const Series f = degenerate_delta(order);
    BasisExpansion out{n, k, {}};
    Series op = g;
    for (int m = 0; m <= n; ++m) {
        out.coefficients.push_back(pair(op, p) * (Rat(1) / factorial(static_cast<unsigned>(m))));
        op = op * f;
    }
    return out;
}

BasisExpansion sheffer_expand_triangular(const BiPoly& p, int k)
{
    const int n = static_cast<int>(p.x_degree());
    const std::vector<BiPoly> basis = fdpb_polynomials(k, n);
    BasisExpansion out{n, k, std::vector<BiPoly>(static_cast<std::size_t>(n) + 1)};
    BiPoly residual = p;
    for (int m = n; m >= 0; --m) {
        // basis[m] is monic of degree m in x.
        BiPoly a = residual.x_coefficient(static_cast<std::uint32_t>(m));
        residual -= a * basis[static_cast<std::size_t>(m)];
        out.coefficients[static_cast<std::size_t>(m)] = std::move(a);
    }
    return out;
}

BasisExpansion sheffer_expand(const BiPoly& p, int k)
{
    BasisExpansion functional = sheffer_expand_functional(p, k);
    BasisExpansion triangular = sheffer_expand_triangular(p, k);
    if (functional != triangular) {
        auto strings = [](const BasisExpansion& e) {
            std::vector<std::string> out;
            for (const auto& c : e.coefficients) {
                out.push_back(canonical_string(c));
            }
            return out;
        };
        throw RouteMismatch("basis expansion: functional and triangular routes differ for k=" + std::to_string(k),
                            strings(functional), strings(triangular));
    }
    return functional;
}

BiPoly reconstruct(const BasisExpansion& e)
{
    if (e.coefficients.empty()) {
        return {};
    }
    const std::vector<BiPoly> basis = fdpb_polynomials(e.k, static_cast<int>(e.coefficients.size()) - 1);
    BiPoly out;
    for (std::size_t m = 0; m < e.coefficients.size(); ++m) {
        out += e.coefficients[m] * basis[m];
    }
    return out;
}

Connection eq60_connection(int n, int k)
{
    const std::vector<BiPoly> basis = fdpb_polynomials(k, n);
    Connection c;
    for (int m = 0; m <= n; ++m) {
        c.assembled += BiPoly::monomial(stirling(StirlingKind::second, n, m), static_cast<std::uint32_t>(n - m), 0)
                       * basis[static_cast<std::size_t>(m)];
    }
    c.expected = classical_poly_bernoulli(n, k, Argument::polynomial());
    c.lambda_free = c.assembled.is_lambda_free();
    c.equal = c.assembled == c.expected;
    return c;
}

} // namespace dpb
