#include "dpb/sequences.hpp"

#include <string>

#include "dpb/error.hpp"

namespace dpb {

StirlingTable::StirlingTable(StirlingKind kind, int n_max) : kind_(kind), n_max_(n_max)
{
    if (n_max < 0) {
        throw IndexOutOfRange("StirlingTable: negative size");
    }
    rows_.resize(static_cast<std::size_t>(n_max) + 1);
    rows_[0] = {Rat(1)};
    for (int n = 0; n < n_max; ++n) {
        const auto& prev = rows_[static_cast<std::size_t>(n)];
        auto& row = rows_[static_cast<std::size_t>(n) + 1];
        row.assign(static_cast<std::size_t>(n) + 2, Rat{});
        for (int l = 1; l <= n + 1; ++l) {
            const Rat left = prev[static_cast<std::size_t>(l) - 1];
            const Rat same = l <= n ? prev[static_cast<std::size_t>(l)] : Rat{};
            if (kind == StirlingKind::first_signed) {
                // S1(n+1,l) = S1(n,l-1) - n S1(n,l)
                row[static_cast<std::size_t>(l)] = left - Rat(n) * same;
            } else {
                // S2(n+1,l) = l S2(n,l) + S2(n,l-1)
                row[static_cast<std::size_t>(l)] = Rat(l) * same + left;
            }
        }
    }
}

const Rat& StirlingTable::operator()(int n, int l) const
{
    if (n < 0 || l < 0 || l > n || n > n_max_) {
        throw IndexOutOfRange("Stirling index (" + std::to_string(n) + ", " + std::to_string(l)
                              + ") outside 0 <= l <= n <= " + std::to_string(n_max_));
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(l)];
}

namespace {

constexpr int kCachedStirling = 64;

const StirlingTable& cached(StirlingKind kind)
{
    static const StirlingTable first(StirlingKind::first_signed, kCachedStirling);
    static const StirlingTable second(StirlingKind::second, kCachedStirling);
    return kind == StirlingKind::first_signed ? first : second;
}

} // namespace

Rat stirling(StirlingKind kind, int n, int l)
{
    if (n < 0 || l < 0 || l > n) {
        throw IndexOutOfRange("Stirling index (" + std::to_string(n) + ", " + std::to_string(l)
                              + ") outside 0 <= l <= n");
    }
    if (n <= kCachedStirling) {
        return cached(kind)(n, l);
    }
    return StirlingTable(kind, n)(n, l);
}

Rat stirling_or_zero(StirlingKind kind, int n, int l)
{
    if (n < 0 || l < 0 || l > n) {
        return Rat{};
    }
    return stirling(kind, n, l);
}

std::vector<Rat> bernoulli_numbers(int n_max)
{
    // t/(e^t - 1) as a quotient of t by e^t - 1, both of valuation 1.
    auto order = static_cast<std::size_t>(n_max) + 1;
    Series e = exp_linear(BiPoly(1), order);
    e[0] = BiPoly{};
    Series q = series_div(Series::t(order), e);
    std::vector<Rat> out;
    for (int n = 0; n <= n_max; ++n) {
        out.push_back(*egf_coeff(q, static_cast<std::size_t>(n)).constant_value());
    }
    return out;
}

std::vector<Rat> bernoulli_second_kind_numbers(int n_max)
{
    auto order = static_cast<std::size_t>(n_max) + 1;
    Series log1p = series_log(Series::constant(BiPoly(1), order) + Series::t(order));
    Series q = series_div(Series::t(order), log1p);
    std::vector<Rat> out;
    for (int n = 0; n <= n_max; ++n) {
        out.push_back(*egf_coeff(q, static_cast<std::size_t>(n)).constant_value());
    }
    return out;
}

Rat bernoulli(int n)
{
    if (n < 0) {
        throw IndexOutOfRange("bernoulli: negative index");
    }
    return bernoulli_numbers(n).back();
}

Rat bernoulli_second_kind(int n)
{
    if (n < 0) {
        throw IndexOutOfRange("bernoulli_second_kind: negative index");
    }
    return bernoulli_second_kind_numbers(n).back();
}

BiPoly gen_falling(const BiPoly& mu, int n)
{
    if (n < 0) {
        throw IndexOutOfRange("gen_falling: negative index");
    }
    BiPoly out(1);
    for (int i = 0; i < n; ++i) {
        out *= mu - BiPoly::monomial(Rat(i), 1, 0);
    }
    return out;
}

Series polylog_series(int k, const Series& inner)
{
    if (!inner[0].is_zero()) {
        throw NonzeroConstantTerm("polylog argument must vanish at t = 0");
    }
    const std::size_t order = inner.order();
    Series out(order);
    Series power = inner;
    for (std::size_t n = 1; n <= order; ++n) {
        // n^{-k}: an integer weight when k <= 0.
        Rat weight = pow(Rat(static_cast<long>(n)), -static_cast<long>(k));
        out += power * BiPoly(weight);
        if (n < order) {
            power = power * inner;
        }
    }
    return out;
}

} // namespace dpb
