#pragma once

// Complete enumeration of non-trivial solutions of F_m(x, y) = lambda over
// the positive divisors lambda of m^2 + 3m + 9.
//
// Regimes:
//   m <= 29   bounded scan over 1 <= y <= 10^5 ("bounded-only"); the
//             completeness of this range rests on external verification.
//   m >= 30   bounded scan below 8(m^2+3m+9)/(2m+3), then every convergent
//             of theta2 up to the ceiling y^(2-kappa) < 17.78 2.59^kappa
//             lambda ("bounded+convergent"), which is self-certifying.

#include <optional>
#include <string>
#include <vector>

#include "thue/arith.hpp"
#include "thue/family.hpp"

namespace thue {

/// No pair L_m = L_n with -1 <= m < n exists beyond this m.
inline const BigInt kSearchCeiling{35731};
/// Smallest m for which the kappa bound is available.
inline constexpr long kConvergentThreshold = 30;
/// y-range of the bounded scan used when m < kConvergentThreshold.
inline const BigInt kSmallIndexYBound{100000};

/// kappa = (log(sqrt(m^2+3m+9)) + 0.83) / (log(m + 3/2) - 1.3), enclosed by
/// outward-rounded 256-bit evaluation.
struct KappaBound {
  double lower = 0;  // rounded down
  double upper = 0;  // rounded up
  std::string upper_decimal;  // 40 significant digits, rounded up
};

/// Throws std::invalid_argument for m < 30.
KappaBound lpv_kappa(const BigInt& m);

/// Smallest integer Y with y <= Y for every normal-form solution of
/// |F_m| <= lambda_max. Throws std::invalid_argument for m < 30 and
/// std::domain_error when kappa is not provably below 2.
BigInt y_ceiling(const BigInt& m, const BigInt& lambda_max);

/// ceil(2 (2m + 3 + 27/(2m+3))) = ceil(8 (m^2+3m+9) / (2m+3)).
BigInt convergent_threshold_y(const BigInt& m);

enum class Certificate { BoundedConvergent, BoundedOnly };

const char* to_string(Certificate c);

struct SearchPlan {
  BigInt m;
  std::vector<BigInt> lambdas;  // positive divisors of m^2+3m+9
  BigInt brute_y_bound;
  bool use_convergents = false;
  std::optional<KappaBound> kappa;
  std::optional<BigInt> y_ceiling;
};

/// Plan for m >= -1.
SearchPlan make_plan(const BigInt& m);

struct OrbitSolution {
  BigInt lambda;
  OrbitClass orbit;
  std::optional<BigInt> N;  // N-map image; always integral in practice

  BigInt cross() const { return cross_term(orbit.canonical().x, orbit.canonical().y); }
  bool primitive() const { return gcd(orbit.canonical().x, orbit.canonical().y) == 1; }
};

struct SolutionSet {
  BigInt m;
  std::vector<OrbitSolution> orbits;  // sorted by (lambda, |xy(x+y)|, xy(x+y), canonical)
  Certificate certificate = Certificate::BoundedOnly;

  std::size_t solution_count() const { return 3 * orbits.size(); }
  std::size_t primitive_solution_count() const;
};

/// Every non-trivial (x, y) with 1 <= |y'| <= y_bound for some orbit member
/// (x', y') of (x, y) or (-x, -y), and F_m(x, y) in `lambdas`. m >= -1.
SolutionSet brute_search(const BigInt& m, const std::vector<BigInt>& lambdas, const BigInt& y_bound);

/// Tests every convergent p/q of theta2 with q <= y_ceiling(m, max lambda),
/// together with its symmetry images and integer multiples. m >= 30.
SolutionSet convergent_search(const BigInt& m, const std::vector<BigInt>& lambdas);

/// All non-trivial solutions for any integer m (indices below -1 are
/// solved through their normalised twin and mapped back).
SolutionSet solve_family(const BigInt& m);

struct RangeResult {
  std::vector<SolutionSet> sets;  // one per m, ascending
  /// Cross-check failures: a non-integral N, or a partner count differing
  /// from the primitive solution count / 3.
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
  std::size_t total_solutions() const;
};

/// solve_family over [lo, hi] with -1 <= lo <= hi, plus cross-checks.
RangeResult solve_range(const BigInt& lo, const BigInt& hi, unsigned workers = 0);

}  // namespace thue
