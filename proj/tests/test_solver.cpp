#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "thue/isofield.hpp"
#include "thue/solver.hpp"

using namespace thue;

namespace {

using Key = std::pair<BigInt, Point>;

std::set<Key> keys(const SolutionSet& s) {
  std::set<Key> out;
  for (const auto& o : s.orbits) out.emplace(o.lambda, o.orbit.canonical());
  return out;
}

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

oracle::Real50 to_real50(const BigInt& v) { return oracle::Real50(v.get_str()); }

}  // namespace

TEST_CASE("kappa encloses an independent evaluation") {
  for (long m : {30L, 31L, 100L, 1259L, 2408L, 35731L}) {
    const KappaBound k = lpv_kappa(m);
    const oracle::Real50 ref = oracle::kappa(m);
    CHECK(oracle::Real50(k.lower) <= ref);
    CHECK(ref <= oracle::Real50(k.upper));
    CHECK(k.upper - k.lower < 1e-12);
    CHECK(oracle::Real50(k.upper_decimal) >= ref);
  }
  CHECK(lpv_kappa(30).upper == doctest::Approx(1.9923).epsilon(1e-4));
  CHECK(lpv_kappa(30).upper < 2);
  CHECK(lpv_kappa(2408).upper == doctest::Approx(1.328).epsilon(1e-3));
  CHECK_THROWS_AS(lpv_kappa(29), std::invalid_argument);
}

TEST_CASE("kappa decreases on [30, 35731]") {
  double previous = lpv_kappa(30).lower;
  for (long m = 31; m <= 35731; m += 7) {
    const KappaBound k = lpv_kappa(m);
    CHECK(k.upper < previous);
    previous = k.lower;
  }
}

TEST_CASE("y ceiling") {
  for (long m : {30L, 45L, 200L, 2408L, 10000L}) {
    const BigInt lambda = sqrt_disc(m);
    const BigInt Y = y_ceiling(m, lambda);
    const oracle::Real50 k = oracle::kappa(m);
    const oracle::Real50 base = oracle::Real50("17.78") * pow(oracle::Real50("2.59"), k) * to_real50(lambda);
    const oracle::Real50 ref = pow(base, 1 / (2 - k));
    // Never below the true value, and not wastefully above it.
    CHECK(to_real50(Y) >= ref);
    CHECK(to_real50(Y) <= ref * oracle::Real50("1.000001") + 1);
  }
  const BigInt y2408 = y_ceiling(2408, sqrt_disc(2408));
  CHECK(y2408 > BigInt("1000000000000", 10));
  CHECK(y2408 < BigInt("100000000000000", 10));
  const BigInt y30 = y_ceiling(30, sqrt_disc(30));
  CHECK(y30.get_str().size() > 300);
  CHECK_THROWS_AS(y_ceiling(29, 1), std::invalid_argument);
  CHECK_THROWS_AS(y_ceiling(40, 0), std::invalid_argument);
}

TEST_CASE("brute-force threshold") {
  for (long m = 0; m <= 500; ++m) {
    // ceil(2 (2m + 3 + 27/(2m+3))) from the unsimplified expression.
    const Rational v = 2 * (Rational(2 * m + 3) + make_rational(27, 2 * m + 3));
    CHECK(convergent_threshold_y(m) == ceil(v));
  }
}

TEST_CASE("plans") {
  const SearchPlan small = make_plan(29);
  CHECK_FALSE(small.use_convergents);
  CHECK(small.brute_y_bound == kSmallIndexYBound);
  const SearchPlan large = make_plan(30);
  CHECK(large.use_convergents);
  // 30^2 + 90 + 9 = 999 = 3^3 * 37
  CHECK(large.lambdas == ints({1, 3, 9, 27, 37, 111, 333, 999}));
  CHECK(large.lambdas == divisors(factor(sqrt_disc(30))));
  CHECK(large.y_ceiling.has_value());
  CHECK_THROWS_AS(make_plan(-2), std::invalid_argument);
}

TEST_CASE("bounded search examples") {
  const SolutionSet a = brute_search(2, ints({1}), 20);
  REQUIRE(a.orbits.size() == 1);
  CHECK(a.orbits[0].orbit.contains({-7, -2}));
  CHECK(brute_search(4, ints({1, 37}), 50).orbits.empty());
  const SolutionSet b = brute_search(54, ints({343}), 10);
  REQUIRE(b.orbits.size() == 1);
  CHECK(b.orbits[0].orbit.contains({-1, -2}));
}

TEST_CASE("solve_family examples") {
  const SolutionSet s = solve_family(-1);
  REQUIRE(s.orbits.size() == 3);
  CHECK(s.orbits[0].lambda == 1);
  CHECK(s.orbits[0].orbit.contains({-1, -1}));
  CHECK(s.orbits[1].lambda == 1);
  CHECK(s.orbits[1].orbit.contains({5, 4}));
  CHECK(s.orbits[2].lambda == 7);
  CHECK(s.orbits[2].orbit.contains({2, 1}));
  CHECK(s.certificate == Certificate::BoundedOnly);

  CHECK(solve_family(4).orbits.empty());

  const SolutionSet t = solve_family(2389);
  REQUIRE(t.orbits.size() == 1);
  CHECK(t.orbits[0].lambda == 300763);
  CHECK(t.orbits[0].orbit.contains({-7, -2}));
  CHECK(t.certificate == Certificate::BoundedConvergent);
  CHECK(std::string(to_string(t.certificate)) == "bounded+convergent");
}

TEST_CASE("indices below -1 map through their twin") {
  for (long m = -40; m <= -2; ++m) {
    const SolutionSet s = solve_family(m);
    const SolutionSet twin = solve_family(-m - 3);
    CHECK(s.orbits.size() == twin.orbits.size());
    for (const auto& o : s.orbits) {
      for (const auto& p : o.orbit.members()) CHECK(eval_form(m, p.x, p.y) == o.lambda);
    }
  }
}

TEST_CASE("convergent search adds nothing at m = 54 and m = 1259") {
  for (long m : {54L, 1259L}) {
    const SearchPlan plan = make_plan(m);
    const auto brute = keys(brute_search(m, plan.lambdas, plan.brute_y_bound));
    const auto conv = convergent_search(m, plan.lambdas);
    for (const auto& k : keys(conv)) CHECK(brute.count(k) == 1);
  }
  const SolutionSet s = solve_family(1259);
  bool found = false;
  for (const auto& o : s.orbits) found = found || o.orbit.contains({22, -3});
  CHECK(found);
}

TEST_CASE("range counts") {
  const RangeResult r = solve_range(-1, 11);
  REQUIRE(r.ok());
  std::vector<std::size_t> counts;
  for (const auto& s : r.sets) counts.push_back(s.solution_count());
  CHECK(counts == std::vector<std::size_t>{9, 6, 3, 3, 6, 0, 9, 0, 0, 0, 0, 0, 0});
  CHECK(r.total_solutions() == 36);
  CHECK_THROWS_AS(solve_range(-2, 3), std::invalid_argument);
}

TEST_CASE("solution properties over [-1, 400]") {
  const RangeResult r = solve_range(-1, 400);
  CHECK(r.ok());
  for (const auto& s : r.sets) {
    const BigInt d = sqrt_disc(s.m);
    CHECK(s.solution_count() % 3 == 0);
    for (const auto& o : s.orbits) {
      CHECK(mpz_divisible_p(d.get_mpz_t(), o.lambda.get_mpz_t()));
      CHECK(o.primitive());
      REQUIRE(o.N.has_value());
      for (const auto& p : o.orbit.members()) {
        CHECK(eval_form(s.m, p.x, p.y) == o.lambda);
        CHECK_FALSE(is_trivial(p.x, p.y));
        CHECK(n_from_solution(s.m, p.x, p.y) == o.N);
      }
    }
  }
}

TEST_CASE("results do not depend on the worker count") {
  const RangeResult a = solve_range(-1, 150, 1);
  const RangeResult b = solve_range(-1, 150, 3);
  REQUIRE(a.sets.size() == b.sets.size());
  for (std::size_t i = 0; i < a.sets.size(); ++i) CHECK(keys(a.sets[i]) == keys(b.sets[i]));
}
