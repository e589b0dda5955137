#include "dpb/identities.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "dpb/error.hpp"
#include "dpb/sequences.hpp"
#include "dpb/umbral.hpp"

namespace dpb {

namespace {

struct NamedId {
    IdentityId id;
    std::string_view name;
};

constexpr NamedId kNames[] = {
    {IdentityId::thm1_addition, "THM1_ADDITION"},
    {IdentityId::thm1_limit, "THM1_LIMIT"},
    {IdentityId::thm2_difference, "THM2_DIFFERENCE"},
    {IdentityId::thm3_k2, "THM3_K2"},
    {IdentityId::thm4_closed, "THM4_CLOSED"},
    {IdentityId::thm5_recurrence, "THM5_RECURRENCE"},
    {IdentityId::thm6_negative, "THM6_NEGATIVE"},
    {IdentityId::thm7_difference_quotient, "THM7_DIFFERENCE_QUOTIENT"},
    {IdentityId::thm8_integral, "THM8_INTEGRAL"},
    {IdentityId::eq9_delta, "EQ9_DELTA"},
    {IdentityId::eq14_shift, "EQ14_SHIFT"},
    {IdentityId::eq38_falling_integral, "EQ38_FALLING_INTEGRAL"},
    {IdentityId::deriv_formula, "DERIV_FORMULA"},
    {IdentityId::eq60_basis, "EQ60_BASIS"},
    {IdentityId::iterated_integral, "ITERATED_INTEGRAL"},
};

constexpr int kIteratedMaxN = 10;
constexpr int kIteratedMaxK = 4;

} // namespace

std::string_view identity_name(IdentityId id)
{
    for (const auto& e : kNames) {
        if (e.id == id) {
            return e.name;
        }
    }
    return "UNKNOWN";
}

IdentityId parse_identity(std::string_view name)
{
    for (const auto& e : kNames) {
        if (e.name == name) {
            return e.id;
        }
    }
    throw UnknownIdentity("unknown identity '" + std::string(name) + "'");
}

const std::vector<IdentityId>& all_identities()
{
    static const std::vector<IdentityId> ids = [] {
        std::vector<IdentityId> v;
        for (const auto& e : kNames) {
            v.push_back(e.id);
        }
        return v;
    }();
    return ids;
}

namespace {

// Tables shared by all cells of a run. Each entry is computed once, under
// the lock, and never modified afterwards; std::map keeps references stable.
class Tables {
public:
    explicit Tables(int n_max) : n_max_(n_max) {}

    int n_max() const { return n_max_; }

    const std::vector<BiPoly>& numbers(int k)
    {
        return get("numbers", k, [this, k] { return fdpb_numbers(k, n_max_); });
    }

    const std::vector<BiPoly>& polynomials(int k)
    {
        const auto& nums = numbers(k);
        return get("polynomials", k, [this, &nums] {
            std::vector<BiPoly> out;
            for (int n = 0; n <= n_max_; ++n) {
                out.push_back(expand_in_x(nums, n));
            }
            return out;
        });
    }

    const std::vector<BiPoly>& gf_polynomials(int k)
    {
        return get("gf_polynomials", k, [this, k] {
            return values({Family::fully_degenerate, k, Argument::polynomial()});
        });
    }

    const std::vector<BiPoly>& classical(int k)
    {
        return get("classical", k, [this, k] { return values({Family::poly_bernoulli, k, Argument::polynomial()}); });
    }

    const std::vector<BiPoly>& family(Family f)
    {
        return get(std::string(family_name(f)), 0, [this, f] { return values({f, std::nullopt, Argument::polynomial()}); });
    }

    const std::vector<BiPoly>& iterated(int k)
    {
        return get("iterated", k, [this, k] {
            const int top = std::min(n_max_, kIteratedMaxN);
            Series s = fdpb_iterated_integral(k, static_cast<std::size_t>(top));
            std::vector<BiPoly> out;
            for (int n = 0; n <= top; ++n) {
                out.push_back(egf_coeff(s, static_cast<std::size_t>(n)));
            }
            return out;
        });
    }

private:
    std::vector<BiPoly> values(const FamilySpec& spec) const
    {
        std::vector<BiPoly> out;
        for (auto& v : family_values(spec, n_max_)) {
            out.push_back(std::move(v.value));
        }
        return out;
    }

    const std::vector<BiPoly>& get(const std::string& kind, int k, const std::function<std::vector<BiPoly>()>& make)
    {
        std::lock_guard lock(mutex_);
        auto key = std::make_pair(kind, k);
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            it = entries_.emplace(key, make()).first;
        }
        return it->second;
    }

    int n_max_;
    std::mutex mutex_;
    std::map<std::pair<std::string, int>, std::vector<BiPoly>> entries_;
};

struct CellResult {
    bool ok = true;
    BiPoly lhs;
    BiPoly rhs;
    std::string note;
};

CellResult compare(BiPoly lhs, BiPoly rhs, std::string note = {})
{
    bool ok = lhs == rhs;
    return {ok, std::move(lhs), std::move(rhs), ok ? std::string{} : std::move(note)};
}

const BiPoly& at(const std::vector<BiPoly>& v, int n) { return v[static_cast<std::size_t>(n)]; }

BiPoly lam(const Rat& c, int d) { return BiPoly::monomial(c, static_cast<std::uint32_t>(d), 0); }

Rat binom(int n, int k) { return binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)); }

Rat fact(int n) { return factorial(static_cast<unsigned>(n)); }

BiPoly at_x(const BiPoly& p, const Rat& x) { return eval_at(p, std::nullopt, x); }

BiPoly at_lambda_zero(const BiPoly& p) { return eval_at(p, Rat(0), std::nullopt); }

// Both sides of the addition law are polynomials of degree <= n in y, so
// agreement at n_max + 1 distinct rational points settles it; lambda itself is
// probed as well.
std::vector<BiPoly> addition_probes(int n_max)
{
    std::vector<BiPoly> probes = {BiPoly(1), BiPoly(-1), BiPoly::lambda(), BiPoly(Rat(1, 2))};
    std::size_t rational_points = 3;
    for (long v = 2; rational_points < static_cast<std::size_t>(n_max) + 1; ++v) {
        probes.emplace_back(Rat(v));
        probes.emplace_back(Rat(-v));
        rational_points += 2;
    }
    return probes;
}

CellResult thm1_addition(Tables& t, int n, int k, const CheckOptions& opt)
{
    const auto& gf = t.gf_polynomials(k);
    const auto& polys = t.polynomials(k);
    for (const BiPoly& y : addition_probes(t.n_max())) {
        BiPoly lhs = substitute_x(at(gf, n), BiPoly::x() + y);
        BiPoly shift = opt.fault == Fault::thm1_shift_sign ? -y : y;
        BiPoly rhs;
        for (int l = 0; l <= n; ++l) {
            rhs += gen_falling(shift, n - l) * at(polys, l) * binom(n, l);
        }
        if (lhs != rhs) {
            return {false, lhs, rhs, "y = " + canonical_string(y)};
        }
    }
    return {true, at(gf, n), at(gf, n), {}};
}

CellResult thm1_limit(Tables& t, int n, int k)
{
    CellResult r = compare(at_lambda_zero(at(t.polynomials(k), n)), at(t.classical(k), n),
                           "lambda = 0 value differs from the poly-Bernoulli polynomial");
    if (!r.ok) {
        return r;
    }
    const BiPoly& bern = at(t.family(Family::bernoulli), n);
    CellResult carlitz = compare(at_lambda_zero(at(t.family(Family::carlitz), n)), bern,
                                 "Carlitz polynomial at lambda = 0 differs from B_n(x)");
    if (!carlitz.ok) {
        return carlitz;
    }
    CellResult daehee = compare(at_lambda_zero(at(t.family(Family::daehee_type), n)), bern,
                                "Daehee-type polynomial at lambda = 0 differs from B_n(x)");
    if (!daehee.ok) {
        return daehee;
    }
    return r;
}

CellResult thm2_difference(Tables& t, int n, int k, const CheckOptions& opt)
{
    BiPoly lhs = at(t.numbers(k), n) - at_x(at(t.polynomials(k), n), Rat(-1));
    const int exponent = opt.fault == Fault::thm2_exponent ? k : k - 1;
    BiPoly rhs;
    BiPoly rhs_unsimplified;
    for (int l = 1; l <= n; ++l) {
        Rat outer = stirling(StirlingKind::first_signed, n, l);
        for (int m = 0; m <= l - 1; ++m) {
            Rat s = stirling(StirlingKind::second, l, m + 1) * outer;
            Rat sign = (l - m - 1) % 2 == 0 ? Rat(1) : Rat(-1);
            rhs += lam(sign * fact(m) * s * pow(Rat(m + 1), -exponent), n - l);
            rhs_unsimplified += lam(sign * fact(m) * Rat(m + 1) * s * pow(Rat(m + 1), -k), n - l);
        }
    }
    if (rhs != rhs_unsimplified) {
        return {false, rhs, rhs_unsimplified, "simplified and unsimplified right-hand sides differ"};
    }
    return compare(std::move(lhs), std::move(rhs));
}

CellResult thm3_k2(Tables& t, int n, const CheckOptions& opt)
{
    const auto& carlitz = t.family(Family::carlitz);
    const auto& daehee = t.family(Family::daehee_type);
    BiPoly rhs;
    for (int l = 0; l <= n; ++l) {
        BiPoly b = substitute_x(at(daehee, n - l), -BiPoly::lambda());
        const int denom = opt.fault == Fault::thm3_denominator ? n - l + 2 : n - l + 1;
        rhs += at_x(at(carlitz, l), Rat(1)) * b * (binom(n, l) / Rat(denom));
    }
    return compare(at(t.numbers(2), n), std::move(rhs));
}

CellResult thm4_closed(Tables& t, int n, int k, const CheckOptions& opt)
{
    BiPoly closed = opt.fault == Fault::thm4_sign
                        ? detail::fdpb_closed_signed(n, k, [](int m, int) { return m; })
                        : fdpb_closed(n, k);
    CellResult r = compare(at(t.numbers(k), n), closed);
    if (!r.ok) {
        return r;
    }
    BiPoly limit = at_lambda_zero(closed);
    CellResult lim = compare(limit, BiPoly(poly_bernoulli_closed(n, k)), "lambda = 0 value differs from the m-sum");
    if (!lim.ok) {
        return lim;
    }
    CellResult classical = compare(limit, at_x(at(t.classical(k), n), Rat(0)),
                                   "lambda = 0 value differs from the poly-Bernoulli number");
    if (!classical.ok) {
        return classical;
    }
    return r;
}

CellResult thm5_recurrence(Tables& t, int n, int k, const CheckOptions& opt)
{
    const auto& cur = t.numbers(k);
    const auto& prev = t.numbers(k - 1);
    BiPoly braces = at(prev, n);
    const int upper = opt.fault == Fault::thm5_upper_bound ? n : n - 1;
    for (int m = 1; m <= upper; ++m) {
        braces -= at(cur, m) * gen_falling(BiPoly(1), n - m + 1) * binom(n, m - 1);
    }
    BiPoly tail;
    for (int m = 0; m <= n - 1; ++m) {
        tail += gen_falling(BiPoly(1), n - m) * at(cur, m) * (binom(n, m) * Rat(m));
    }
    braces -= BiPoly::lambda() * tail;
    return compare(at(cur, n), braces * (Rat(1) / Rat(n + 1)));
}

CellResult thm6_negative(Tables& t, int n, int k)
{
    BiPoly negative = fdpb_negative_closed(n, k);
    CellResult r = compare(negative, at(t.numbers(-k), n), "differs from the generating function at -k");
    if (!r.ok) {
        return r;
    }
    CellResult closed = compare(negative, fdpb_closed(n, -k), "differs from the double sum at -k");
    if (!closed.ok) {
        return closed;
    }
    Rat limit;
    for (int j = 0; j <= n; ++j) {
        Rat term = fact(j) * pow(Rat(j + 1), k) * stirling(StirlingKind::second, n, j);
        limit += (j + n) % 2 == 0 ? term : -term;
    }
    CellResult lim = compare(at_lambda_zero(negative), BiPoly(limit), "lambda = 0 value differs from the j-sum");
    return lim.ok ? r : lim;
}

CellResult thm7_difference_quotient(Tables& t, int n, int k, const CheckOptions& opt)
{
    const auto& polys = t.polynomials(k);
    BiPoly step = opt.fault == Fault::thm7_shift_sign ? -BiPoly::lambda() : BiPoly::lambda();
    BiPoly lhs = BiPoly::lambda() * at(polys, n - 1);
    BiPoly rhs = (substitute_x(at(polys, n), BiPoly::x() + step) - at(polys, n)) * (Rat(1) / Rat(n));
    CellResult r = compare(lhs, rhs);
    if (!r.ok) {
        return r;
    }
    // The delta operator (e^{lambda t}-1)/lambda lowers the index by one.
    CellResult delta = compare(lambda_difference_operator(at(polys, n)), at(polys, n - 1) * Rat(n),
                               "delta operator does not lower the index");
    return delta.ok ? r : delta;
}

CellResult thm8_integral(Tables& t, int n, int k, const CheckOptions& opt)
{
    const BiPoly& poly = at(t.polynomials(k), n);
    BiPoly functional = pair(integration_series(BiPoly(1), static_cast<std::size_t>(n)), poly);
    BiPoly direct = integrate_x_unit(poly);
    if (functional != direct) {
        return {false, functional, direct, "functional pairing differs from direct integration"};
    }
    BiPoly summed = integral_unit_interval_sum(t.numbers(k), n, opt.reading);
    CellResult r = compare(functional, summed, "triple sum differs from the functional pairing");
    if (!r.ok) {
        return r;
    }
    const auto& classical = t.classical(k);
    BiPoly limit;
    for (int l = 0; l <= n; ++l) {
        limit += at_x(at(classical, n - l), Rat(0)) * (binom(n, l) / Rat(l + 1));
    }
    CellResult lim = compare(at_lambda_zero(direct), limit, "lambda = 0 value differs from the poly-Bernoulli sum");
    return lim.ok ? r : lim;
}

CellResult eq9_delta(Tables& t, int n)
{
    const BiPoly& p = at(t.family(Family::carlitz), n);
    return compare(at_x(p, Rat(1)) - at_x(p, Rat(0)), BiPoly(n == 1 ? 1 : 0));
}

CellResult eq14_shift(Tables& t, int n)
{
    return compare(at(t.classical(1), n), substitute_x(at(t.family(Family::bernoulli), n), BiPoly::x() + BiPoly(1)));
}

CellResult eq38_falling_integral(int n, const CheckOptions& opt)
{
    BiPoly lhs = integrate_x_unit(gen_falling(BiPoly::x(), n));
    BiPoly rhs;
    if (opt.fault == Fault::eq38_lambda_power) {
        for (int l = 0; l <= n; ++l) {
            rhs += lam(bernoulli_second_kind(n - l), n - l + 1) * gen_falling(BiPoly(1), l + 1)
                   * (binom(n, l) / Rat(l + 1));
        }
    } else {
        rhs = falling_unit_integral(n);
    }
    return compare(std::move(lhs), std::move(rhs));
}

CellResult deriv_formula(Tables& t, int n, int k)
{
    return compare(derivative_x(at(t.gf_polynomials(k), n)), fdpb_x_derivative(n, k));
}

CellResult eq60_basis(Tables& t, int n, int k, const CheckOptions& opt)
{
    const auto& polys = t.polynomials(k);
    BiPoly assembled;
    std::vector<BiPoly> expected_coeffs;
    for (int m = 0; m <= n; ++m) {
        Rat s = opt.fault == Fault::eq60_stirling_kind ? Rat(mpq_class(abs(stirling(StirlingKind::first_signed, n, m).raw())))
                                                       : stirling(StirlingKind::second, n, m);
        expected_coeffs.push_back(lam(stirling(StirlingKind::second, n, m), n - m));
        assembled += lam(s, n - m) * at(polys, m);
    }
    const BiPoly& target = at(t.classical(k), n);
    if (!assembled.is_lambda_free()) {
        return {false, target, assembled, "assembled right-hand side still depends on lambda"};
    }
    CellResult r = compare(target, assembled);
    if (!r.ok) {
        return r;
    }
    BasisExpansion e = sheffer_expand(target, k);
    for (int m = 0; m <= n; ++m) {
        if (e.coefficients[static_cast<std::size_t>(m)] != expected_coeffs[static_cast<std::size_t>(m)]) {
            return {false, e.coefficients[static_cast<std::size_t>(m)], expected_coeffs[static_cast<std::size_t>(m)],
                    "basis coefficient a_" + std::to_string(m) + " differs from lambda^{n-m} S2(n,m)"};
        }
    }
    return r;
}

CellResult iterated_integral(Tables& t, int n, int k) { return compare(at(t.iterated(k), n), at(t.numbers(k), n)); }

CellResult run_cell(IdentityId id, int n, std::optional<int> k, Tables& t, const CheckOptions& opt)
{
    const int kk = k.value_or(0);
    switch (id) {
    case IdentityId::thm1_addition:
        return thm1_addition(t, n, kk, opt);
    case IdentityId::thm1_limit:
        return thm1_limit(t, n, kk);
    case IdentityId::thm2_difference:
        return thm2_difference(t, n, kk, opt);
    case IdentityId::thm3_k2:
        return thm3_k2(t, n, opt);
    case IdentityId::thm4_closed:
        return thm4_closed(t, n, kk, opt);
    case IdentityId::thm5_recurrence:
        return thm5_recurrence(t, n, kk, opt);
    case IdentityId::thm6_negative:
        return thm6_negative(t, n, kk);
    case IdentityId::thm7_difference_quotient:
        return thm7_difference_quotient(t, n, kk, opt);
    case IdentityId::thm8_integral:
        return thm8_integral(t, n, kk, opt);
    case IdentityId::eq9_delta:
        return eq9_delta(t, n);
    case IdentityId::eq14_shift:
        return eq14_shift(t, n);
    case IdentityId::eq38_falling_integral:
        return eq38_falling_integral(n, opt);
    case IdentityId::deriv_formula:
        return deriv_formula(t, n, kk);
    case IdentityId::eq60_basis:
        return eq60_basis(t, n, kk, opt);
    case IdentityId::iterated_integral:
        return iterated_integral(t, n, kk);
    }
    throw UnknownIdentity("unhandled identity");
}

struct Plan {
    IdentityId id;
    int n_min = 0;
    int n_max = 0;
    std::optional<KRange> k_range;
};

Plan plan_for(IdentityId id, int n_max, KRange kr)
{
    Plan p{id, 0, n_max, kr};
    switch (id) {
    case IdentityId::thm2_difference:
    case IdentityId::thm5_recurrence:
    case IdentityId::thm7_difference_quotient:
        p.n_min = 1;
        break;
    case IdentityId::thm3_k2:
        p.k_range = KRange{2, 2};
        break;
    case IdentityId::eq9_delta:
    case IdentityId::eq14_shift:
    case IdentityId::eq38_falling_integral:
        p.k_range.reset();
        break;
    case IdentityId::iterated_integral:
        p.n_max = std::min(n_max, kIteratedMaxN);
        p.k_range = KRange{2, std::max(kIteratedMaxK, kr.max)};
        break;
    default:
        break;
    }
    return p;
}

struct Cell {
    std::size_t plan;
    int n;
    std::optional<int> k;
};

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body)
{
    if (jobs == 0) {
        jobs = std::max(1U, std::thread::hardware_concurrency());
    }
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(count, 1)));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            try {
                for (std::size_t i = next++; i < count; i = next++) {
                    body(i);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : workers) {
        th.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

} // namespace

std::vector<Report> check_many(const std::vector<IdentityId>& ids, int n_max, KRange k_range, const CheckOptions& options)
{
    if (n_max < 1) {
        throw std::invalid_argument("n_max must be at least 1");
    }
    if (k_range.min > k_range.max) {
        throw std::invalid_argument("empty k range");
    }

    std::vector<Plan> plans;
    std::vector<Cell> cells;
    for (IdentityId id : ids) {
        plans.push_back(plan_for(id, n_max, k_range));
        const Plan& p = plans.back();
        for (int n = p.n_min; n <= p.n_max; ++n) {
            if (!p.k_range) {
                cells.push_back({plans.size() - 1, n, std::nullopt});
                continue;
            }
            for (int k = p.k_range->min; k <= p.k_range->max; ++k) {
                cells.push_back({plans.size() - 1, n, k});
            }
        }
    }

    Tables tables(n_max);
    std::vector<CellResult> results(cells.size());
    parallel_for(cells.size(), options.jobs, [&](std::size_t i) {
        const Cell& c = cells[i];
        try {
            results[i] = run_cell(plans[c.plan].id, c.n, c.k, tables, options);
        } catch (const RouteMismatch& e) {
            CellResult r{false, {}, {}, e.what()};
            if (!e.first().empty() && !e.second().empty()) {
                r.lhs = BiPoly::parse(e.first().front());
                r.rhs = BiPoly::parse(e.second().front());
            }
            results[i] = std::move(r);
        } catch (const error& e) {
            results[i] = CellResult{false, {}, {}, e.what()};
        }
    });

    std::vector<Report> reports;
    for (const Plan& p : plans) {
        reports.push_back(Report{p.id, p.n_min, p.n_max, p.k_range, true, std::nullopt, std::nullopt, 0});
    }
    // Cells were laid out in (identity, n, k) order; keep the first failure.
    for (std::size_t i = 0; i < cells.size(); ++i) {
        Report& r = reports[cells[i].plan];
        CellResult& res = results[i];
        ++r.cells;
        if (!res.ok && r.passed) {
            r.passed = false;
            r.counterexample = Counterexample{cells[i].n, cells[i].k, res.lhs, res.rhs, res.note};
        }
        r.last = Witness{cells[i].n, cells[i].k, res.lhs};
    }
    return reports;
}

Report check(IdentityId id, int n_max, KRange k_range, const CheckOptions& options)
{
    return check_many({id}, n_max, k_range, options).front();
}

std::vector<Report> check_all(int n_max, KRange k_range, const CheckOptions& options)
{
    return check_many(all_identities(), n_max, k_range, options);
}

bool all_passed(const std::vector<Report>& reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed; });
}

std::string render_text(const Report& r)
{
    std::ostringstream os;
    os << identity_name(r.identity) << ' ' << (r.passed ? "pass" : "FAIL") << " n=" << r.n_min << ".." << r.n_max;
    if (r.k_range) {
        os << " k=" << r.k_range->min << ".." << r.k_range->max;
    }
    os << " cells=" << r.cells;
    auto where = [&os](int n, const std::optional<int>& k) {
        os << "n=" << n;
        if (k) {
            os << ",k=" << *k;
        }
    };
    if (r.counterexample) {
        const auto& c = *r.counterexample;
        os << " counterexample(";
        where(c.n, c.k);
        os << ") lhs=" << canonical_string(c.lhs) << " rhs=" << canonical_string(c.rhs);
        if (!c.note.empty()) {
            os << " [" << c.note << "]";
        }
    } else if (r.last) {
        os << " last(";
        where(r.last->n, r.last->k);
        os << ")=" << canonical_string(r.last->value);
    }
    return os.str();
}

} // namespace dpb
