#include "dpb/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "dpb/error.hpp"

namespace dpb {

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::vector<BiPoly> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw std::invalid_argument("Series: at least one coefficient is required");
    }
}

Series Series::constant(const BiPoly& c, std::size_t order)
{
    Series s(order);
    s[0] = c;
    return s;
}

Series Series::t(std::size_t order)
{
    Series s(order);
    if (order >= 1) {
        s[1] = BiPoly(1);
    }
    return s;
}

std::size_t Series::valuation() const
{
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        if (!coeffs_[n].is_zero()) {
            return n;
        }
    }
    return coeffs_.size();
}

Series Series::truncated(std::size_t order) const
{
    if (order > this->order()) {
        throw OrderExceeded("cannot extend a series beyond its known order");
    }
    return Series(std::vector<BiPoly>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

Series& Series::operator+=(const Series& o)
{
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        coeffs_[n] += o.coeffs_[n];
    }
    return *this;
}

Series& Series::operator-=(const Series& o)
{
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        coeffs_[n] -= o.coeffs_[n];
    }
    return *this;
}

Series& Series::operator*=(const BiPoly& c)
{
    for (auto& a : coeffs_) {
        a = a * c;
    }
    return *this;
}

Series operator*(const Series& a, const Series& b)
{
    std::size_t order = std::min(a.order(), b.order());
    Series out(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (!b[j].is_zero()) {
                out[i + j] += a[i] * b[j];
            }
        }
    }
    return out;
}

Series Series::operator-() const
{
    Series out = *this;
    for (auto& a : out.coeffs_) {
        a = -a;
    }
    return out;
}

Series series_div(const Series& f, const Series& g)
{
    std::size_t v = g.valuation();
    if (v > g.order()) {
        throw NonUnitLeadingCoefficient("division by a series with no known nonzero coefficient");
    }
    auto lead = g[v].constant_value();
    if (!lead) {
        throw NonUnitLeadingCoefficient("leading coefficient " + canonical_string(g[v])
                                        + " of the divisor is not a rational constant");
    }
    if (f.valuation() < v) {
        throw ValuationMismatch("valuation of the dividend (" + std::to_string(f.valuation())
                                + ") is below that of the divisor (" + std::to_string(v) + ")");
    }
    std::size_t base = std::min(f.order(), g.order());
    if (base < v) {
        throw OrderExceeded("division leaves no determined coefficient");
    }
    std::size_t order = base - v;
    Rat inv = Rat(1) / *lead;
    Series q(order);
    for (std::size_t n = 0; n <= order; ++n) {
        BiPoly acc = f[n + v];
        for (std::size_t j = 1; j <= n; ++j) {
            if (!g[v + j].is_zero() && !q[n - j].is_zero()) {
                acc -= g[v + j] * q[n - j];
            }
        }
        q[n] = acc * inv;
    }
    return q;
}

Series series_compose(const Series& outer, const Series& inner)
{
    if (!inner[0].is_zero()) {
        throw NonzeroConstantTerm("inner series of a composition must vanish at t = 0");
    }
    std::size_t order = std::min(outer.order(), inner.order());
    Series in = inner.truncated(order);
    Series out = Series::constant(outer[order], order);
    for (std::size_t i = order; i-- > 0;) {
        out = out * in;
        out[0] += outer[i];
    }
    return out;
}

Series series_derivative(const Series& f)
{
    if (f.order() == 0) {
        throw OrderExceeded("derivative of a series known only to t^0 is undetermined");
    }
    Series out(f.order() - 1);
    for (std::size_t n = 1; n <= f.order(); ++n) {
        out[n - 1] = f[n] * Rat(static_cast<long>(n));
    }
    return out;
}

Series series_integrate(const Series& f)
{
    Series out(f.order() + 1);
    for (std::size_t n = 0; n <= f.order(); ++n) {
        out[n + 1] = f[n] * (Rat(1) / Rat(static_cast<long>(n) + 1));
    }
    return out;
}

Series series_log(const Series& f)
{
    if (f[0] != BiPoly(1)) {
        throw BadConstantTerm("log requires constant term 1");
    }
    if (f.order() == 0) {
        return Series(0);
    }
    return series_integrate(series_div(series_derivative(f), f.truncated(f.order() - 1)));
}

Series series_exp(const Series& f)
{
    if (!f[0].is_zero()) {
        throw BadConstantTerm("exp requires constant term 0");
    }
    Series g(f.order());
    g[0] = BiPoly(1);
    for (std::size_t n = 1; n <= f.order(); ++n) {
        BiPoly acc;
        for (std::size_t k = 1; k <= n; ++k) {
            if (!f[k].is_zero()) {
                acc += f[k] * g[n - k] * Rat(static_cast<long>(k));
            }
        }
        g[n] = acc * (Rat(1) / Rat(static_cast<long>(n)));
    }
    return g;
}

Series series_pow(const Series& f, unsigned e)
{
    Series result = Series::constant(BiPoly(1), f.order());
    Series base = f;
    while (e != 0) {
        if (e & 1U) {
            result = result * base;
        }
        e >>= 1U;
        if (e != 0) {
            base = base * base;
        }
    }
    return result;
}

Series degenerate_pow(const BiPoly& mu, std::size_t order)
{
    Series s(order);
    s[0] = BiPoly(1);
    for (std::size_t n = 0; n < order; ++n) {
        BiPoly factor = mu - BiPoly::monomial(Rat(static_cast<long>(n)), 1, 0);
        s[n + 1] = s[n] * factor * (Rat(1) / Rat(static_cast<long>(n) + 1));
    }
    return s;
}

Series degenerate_log(std::size_t order)
{
    Series s(order);
    for (std::size_t n = 1; n <= order; ++n) {
        Rat c(n % 2 == 1 ? 1 : -1, static_cast<long>(n));
        s[n] = BiPoly::monomial(c, static_cast<std::uint32_t>(n - 1), 0);
    }
    return s;
}

Series degenerate_delta(std::size_t order)
{
    Series s(order);
    for (std::size_t n = 1; n <= order; ++n) {
        s[n] = BiPoly::monomial(Rat(1) / factorial(static_cast<unsigned>(n)), static_cast<std::uint32_t>(n - 1), 0);
    }
    return s;
}

Series exp_linear(const BiPoly& c, std::size_t order)
{
    Series arg(order);
    if (order >= 1) {
        arg[1] = c;
    }
    return series_exp(arg);
}

BiPoly egf_coeff(const Series& f, std::size_t n)
{
    if (n > f.order()) {
        throw OrderExceeded("EGF coefficient " + std::to_string(n) + " requested from a series known to t^"
                            + std::to_string(f.order()));
    }
    return f[n] * factorial(static_cast<unsigned>(n));
}

Series from_egf(const std::vector<BiPoly>& egf)
{
    std::vector<BiPoly> coeffs;
    coeffs.reserve(egf.size());
    for (std::size_t n = 0; n < egf.size(); ++n) {
        coeffs.push_back(egf[n] * (Rat(1) / factorial(static_cast<unsigned>(n))));
    }
    return Series(std::move(coeffs));
}

std::vector<std::string> render(const Series& f)
{
    std::vector<std::string> out;
    out.reserve(f.order() + 1);
    for (const auto& c : f.coeffs()) {
        out.push_back(canonical_string(c));
    }
    return out;
}

} // namespace dpb
