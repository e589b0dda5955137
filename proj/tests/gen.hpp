#pragma once

// Small random generators for property tests. Every test seeds its own
// engine so failures reproduce.

#include <random>

#include "dpb/bipoly.hpp"
#include "dpb/series.hpp"

namespace gen {

inline dpb::Rat small_rat(std::mt19937& rng, int range = 5, int den_max = 4)
{
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, den_max);
    return dpb::Rat(num(rng), den(rng));
}

/// Random element of Q[lambda, x] with up to `terms` monomials.
inline dpb::BiPoly bipoly(std::mt19937& rng, int terms = 4, int max_lambda = 3, int max_x = 3)
{
    std::uniform_int_distribution<int> count(0, terms);
    std::uniform_int_distribution<int> ld(0, max_lambda);
    std::uniform_int_distribution<int> xd(0, max_x);
    dpb::BiPoly p;
    for (int i = count(rng); i > 0; --i) {
        p.add_term(small_rat(rng), static_cast<std::uint32_t>(ld(rng)), static_cast<std::uint32_t>(xd(rng)));
    }
    return p;
}

/// Random lambda-only polynomial.
inline dpb::BiPoly lambda_poly(std::mt19937& rng, int terms = 3) { return bipoly(rng, terms, 2, 0); }

/// Random polynomial in x with lambda-polynomial coefficients and exact x-degree n.
inline dpb::BiPoly x_poly(std::mt19937& rng, int n)
{
    dpb::BiPoly p;
    for (int i = 0; i <= n; ++i) {
        p.add_term(small_rat(rng, 3, 3), 0, static_cast<std::uint32_t>(i));
        if (rng() % 2 == 0) {
            p.add_term(small_rat(rng, 3, 3), 1, static_cast<std::uint32_t>(i));
        }
    }
    p.add_term(1, 0, static_cast<std::uint32_t>(n)); // keep degree n even if the draw was zero
    if (p.x_degree() != static_cast<std::uint32_t>(n)) {
        p.add_term(1, 0, static_cast<std::uint32_t>(n));
    }
    return p;
}

/// Random series with constant term c0 and small lambda-polynomial coefficients.
inline dpb::Series series(std::mt19937& rng, std::size_t order, const dpb::BiPoly& c0)
{
    std::vector<dpb::BiPoly> c(order + 1);
    c[0] = c0;
    for (std::size_t i = 1; i <= order; ++i) {
        c[i] = bipoly(rng, 2, 1, 0);
    }
    return dpb::Series(std::move(c));
}

} // namespace gen
