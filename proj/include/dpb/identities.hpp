#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dpb/bipoly.hpp"
#include "dpb/families.hpp"

namespace dpb {

enum class IdentityId {
    thm1_addition,
    thm1_limit,
    thm2_difference,
    thm3_k2,
    thm4_closed,
    thm5_recurrence,
    thm6_negative,
    thm7_difference_quotient,
    thm8_integral,
    eq9_delta,
    eq14_shift,
    eq38_falling_integral,
    deriv_formula,
    eq60_basis,
    iterated_integral,
};

/// Upper-case wire name, e.g. "THM1_ADDITION".
std::string_view identity_name(IdentityId id);
/// Throws UnknownIdentity.
IdentityId parse_identity(std::string_view name);
/// Every identity in report order.
const std::vector<IdentityId>& all_identities();

struct KRange {
    int min = -3;
    int max = 3;

    friend bool operator==(const KRange&, const KRange&) = default;
};

struct Counterexample {
    int n = 0;
    std::optional<int> k;
    BiPoly lhs;
    BiPoly rhs;
    std::string note;
};

/// Left-hand side of the last cell checked, reported for orientation.
struct Witness {
    int n = 0;
    std::optional<int> k;
    BiPoly value;
};

struct Report {
    IdentityId identity = IdentityId::thm1_addition;
    int n_min = 0;
    int n_max = 0;
    std::optional<KRange> k_range; ///< absent for identities without k
    bool passed = true;
    std::optional<Counterexample> counterexample;
    std::optional<Witness> last;
    std::size_t cells = 0;
};

/// Deliberate corruptions of one right-hand side, for checking that the
/// harness notices. Never enabled outside tests.
enum class Fault {
    none,
    thm1_shift_sign,      ///< (-y|lambda) in place of (y|lambda)
    thm2_exponent,        ///< (m+1)^k in place of (m+1)^{k-1}
    thm3_denominator,     ///< n-l+2 in place of n-l+1
    thm4_sign,            ///< (-1)^m in place of (-1)^{m+l}
    thm5_upper_bound,     ///< first inner sum runs to n instead of n-1
    thm7_shift_sign,      ///< x - lambda in place of x + lambda
    eq38_lambda_power,    ///< lambda^{n-l+1} in place of lambda^{n-l}
    eq60_stirling_kind,   ///< |S1| in place of S2
};

struct CheckOptions {
    unsigned jobs = 1; ///< worker threads; 0 picks the hardware concurrency
    IntegralReading reading = IntegralReading::reindexed;
    Fault fault = Fault::none;
};

/// Checks one identity for every (n, k) cell; n runs up to n_max (requires
/// n_max >= 1) and k over k_range, except where the identity fixes k.
Report check(IdentityId id, int n_max, KRange k_range, const CheckOptions& options = {});

/// Every identity, in all_identities() order.
std::vector<Report> check_all(int n_max, KRange k_range, const CheckOptions& options = {});
std::vector<Report> check_many(const std::vector<IdentityId>& ids, int n_max, KRange k_range,
                               const CheckOptions& options = {});

bool all_passed(const std::vector<Report>& reports);

/// One line per report, e.g. "THM3_K2 pass n=0..1 k=2..2 cells=2 last(n=1,k=2)=1/4".
std::string render_text(const Report& r);

} // namespace dpb
