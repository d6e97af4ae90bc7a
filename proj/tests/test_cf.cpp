#include "doctest.h"
#include "oracles.hpp"
#include "thue/cf.hpp"

using namespace thue;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<BigInt> from_oracle(const std::vector<oracle::Int>& v) {
  std::vector<BigInt> out;
  for (const auto& a : v) out.push_back(BigInt(a.str(), 10));
  return out;
}

oracle::Real to_real(const Rational& r) {
  return oracle::Real(r.get_num().get_str()) / oracle::Real(r.get_den().get_str());
}

}  // namespace

TEST_CASE("integer cubic helpers") {
  const IntCubic p{BigInt(-1), BigInt(-3), BigInt(0), BigInt(1)};  // X^3 - 3X - 1
  CHECK(eval(p, 2) == 1);
  CHECK(sign_at(p, make_rational(-1, 2)) == 1);
  CHECK(sign_at(p, Rational(0)) == -1);
  const IntCubic shifted = taylor_shift(p, 1);  // (X+1)^3 - 3(X+1) - 1
  CHECK(eval(shifted, 0) == -3);
  CHECK(eval(shifted, 1) == 1);
}

TEST_CASE("rational roots") {
  CHECK(rational_roots(CubicPoly(1, 0, -3, -1)).empty());
  const auto roots = rational_roots(CubicPoly(2, -3, -3, 2));  // (2X-1)(X+1)(X-2)
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == -1);
  CHECK(roots[1] == make_rational(1, 2));
  CHECK(roots[2] == 2);
  CHECK(rational_roots(poly_fm(make_rational(1, 6))) ==
        std::vector<Rational>{make_rational(-3, 2), make_rational(-1, 3), Rational(2)});
}

TEST_CASE("Sturm root count") {
  CHECK(count_real_roots(CubicPoly(1, 0, -3, -1), -2, 2) == 3);
  CHECK(count_real_roots(CubicPoly(1, 0, -3, -1), make_rational(-1, 2), 0) == 1);
  CHECK(count_real_roots(CubicPoly(1, 0, 1, 1), -10, 10) == 1);
}

TEST_CASE("IsolatedRoot validates its bracket") {
  const CubicPoly f0(1, 0, -3, -1);
  CHECK_NOTHROW(IsolatedRoot(f0, make_rational(-1, 2), 0));
  CHECK_THROWS_AS(IsolatedRoot(f0, -2, 2), std::invalid_argument);
  CHECK_THROWS_AS(IsolatedRoot(f0, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(IsolatedRoot(CubicPoly(make_rational(1, 2), 0, -3, -1), -1, 0), std::invalid_argument);
  // (X - 1)(X^2 - 3): the root in (1/2, 3/2) is rational.
  CHECK_THROWS_AS(IsolatedRoot(CubicPoly(1, -1, -3, 3), make_rational(1, 2), make_rational(3, 2)),
                  RationalRootError);
}

TEST_CASE("theta2 isolation") {
  const IsolatedRoot r0 = isolate_theta2(0);
  CHECK(r0.lo() == make_rational(-1, 2));
  CHECK(r0.hi() == 0);

  const IsolatedRoot r18 = refine(isolate_theta2(18), make_rational(1, 100000));
  CHECK(r18.lo() > make_rational(-500, 10000));
  CHECK(r18.hi() < make_rational(-493, 10000));
  const oracle::Real t18 = oracle::theta2(18);
  CHECK(to_real(r18.lo()) < t18);
  CHECK(t18 < to_real(r18.hi()));

  const IsolatedRoot r100 = refine(isolate_theta2(100), make_rational(1, 1000000000000));
  CHECK(r100.width() <= make_rational(1, 1000000000000));
  CHECK(r100.compare(make_rational(-9804, 1000000)) < 0);
  CHECK(r100.compare(make_rational(-9802, 1000000)) > 0);
  const oracle::Real t100 = oracle::theta2(100);
  CHECK(to_real(r100.lo()) < t100);
  CHECK(t100 < to_real(r100.hi()));
}

TEST_CASE("series bounds enclose theta2 for 18 <= m <= 500") {
  for (long m = 18; m <= 500; ++m) {
    const SeriesBounds b = theta2_series_bounds(m);
    const IsolatedRoot r = isolate_theta2(m);
    CHECK(r.compare(b.lower) < 0);
    CHECK(r.compare(b.upper) > 0);
  }
}

TEST_CASE("the printed series bounds miss theta2") {
  // With -3/m^3 the upper bound falls below the root by about 1/m^3.
  for (long m = 18; m <= 500; ++m) {
    const SeriesBounds b = theta2_series_bounds_as_printed(m);
    const IsolatedRoot r = isolate_theta2(m);
    CHECK(r.compare(b.upper) < 0);
  }
}

TEST_CASE("other roots") {
  for (long m = -1; m <= 50; ++m) {
    const oracle::Real t1 = oracle::root(m, 1, m + 3);
    const oracle::Real t3 = oracle::root(m, -2, -1);
    const IsolatedRoot r1 = refine(isolate_theta1(m), make_rational(1, 1000000));
    const IsolatedRoot r3 = refine(isolate_theta3(m), make_rational(1, 1000000));
    CHECK(to_real(r1.lo()) < t1);
    CHECK(t1 < to_real(r1.hi()));
    CHECK(to_real(r3.lo()) < t3);
    CHECK(t3 < to_real(r3.hi()));
  }
}

TEST_CASE("expansion agrees with a high-precision decimal oracle") {
  std::vector<long> ms;
  for (long m = -1; m <= 60; ++m) ms.push_back(m);
  for (long m : {100L, 156L, 1259L, 2389L, 35731L}) ms.push_back(m);
  for (long m : ms) {
    const auto expected = from_oracle(oracle::cf_terms(oracle::theta2(m), 30));
    CHECK_MESSAGE(cf_expand(isolate_theta2(m), 30).quotients == expected, "m = " << m);
  }
  for (long m : {0L, 7L, 30L}) {
    const auto e1 = from_oracle(oracle::cf_terms(oracle::root(m, 1, m + 3), 25));
    CHECK(cf_expand(isolate_theta1(m), 25).quotients == e1);
    const auto e3 = from_oracle(oracle::cf_terms(oracle::root(m, -2, -1), 25));
    CHECK(cf_expand(isolate_theta3(m), 25).quotients == e3);
  }
}

TEST_CASE("expansion state") {
  CHECK_THROWS_AS(cf_expand(isolate_theta2(5), 0), std::invalid_argument);
  CfExpander ex(isolate_theta2(40));
  CHECK(ex.next() == -1);
  for (int i = 1; i < 40; ++i) {
    const IntCubic& p = ex.current_poly();
    // The complete quotient is the single root of p above 1.
    CHECK(sign_variations_above_one(p) == 1);
    CHECK(ex.next() >= 1);
  }
  CHECK(ex.emitted() == 40);
}

TEST_CASE("printed prefixes") {
  CHECK(cf_expand(isolate_theta2(156), 8).quotients == ints({-1, 1, 157, 78, 1, 3, 11, 1286}));
  CHECK(cf_expand(isolate_theta2(20), 10).quotients == ints({-1, 1, 21, 10, 1, 3, 1, 3, 2, 3}));
  CHECK(cf_expand(isolate_theta2(18), 10).quotients == ints({-1, 1, 19, 9, 1, 3, 1, 6, 1, 2}));
  CHECK(cf_expand(isolate_theta2(28), 10).quotients == ints({-1, 1, 29, 14, 1, 3, 1, 1, 6, 4}));
  CHECK(cf_expand(isolate_theta2(29), 10).quotients == ints({-1, 1, 30, 15, 3, 1, 1, 2, 3, 4}));
  CHECK(format_cf(ContinuedFraction{ints({-1, 1, 19})}) == "-1;1,19");
}

TEST_CASE("residue patterns") {
  CHECK(residue_pattern(156) == ints({-1, 1, 157, 78, 1, 3, 11, 1286}));
  CHECK(residue_pattern(20) == ints({-1, 1, 21, 10, 1, 3, 1, 3, 2, 3}));
  CHECK(residue_pattern(18) == ints({-1, 1, 19, 9, 1, 3, 1, 6, 1, 2}));
  CHECK_FALSE(residue_pattern(16).has_value());
  CHECK_FALSE(residue_pattern(142).has_value());  // 14k+2 below 156
  CHECK_FALSE(residue_pattern(51).has_value());   // 14k+9 below 65

  for (long m = 18; m <= 500; ++m) {
    const auto pattern = residue_pattern(m);
    if (!pattern) continue;
    CHECK_MESSAGE(cf_expand(isolate_theta2(m), pattern->size()).quotients == *pattern, "m = " << m);
  }
}

TEST_CASE("the printed 14k+9 pattern is contradicted by the oracle") {
  for (long m = 65; m <= 500; m += 14) {
    REQUIRE(residue_pattern_corrected(m));
    const auto printed = *residue_pattern_as_printed(m);
    const auto actual = from_oracle(oracle::cf_terms(oracle::theta2(m), printed.size()));
    CHECK(actual != printed);
    // Dropping the two printed terms before the last one gives the expansion.
    std::vector<BigInt> dropped(printed.begin(), printed.end() - 3);
    dropped.push_back(printed.back());
    CHECK(std::equal(dropped.begin(), dropped.end(), actual.begin()));
  }
  CHECK_FALSE(residue_pattern_corrected(156));
  CHECK(residue_pattern(156) == residue_pattern_as_printed(156));
}

TEST_CASE("convergents") {
  const ContinuedFraction minimal{ints({-1, 1})};
  const auto c = convergents(minimal);
  CHECK(c.back().p == 0);
  CHECK(c.back().q == 1);

  for (long m : {-1L, 0L, 18L, 30L, 1259L}) {
    const ContinuedFraction cf = cf_expand(isolate_theta2(m), 25);
    const auto conv = convergents(cf);
    REQUIRE(conv.size() == 25);
    for (const auto& k : conv) {
      CHECK(gcd(k.p, k.q) == 1);
      const Rational approx = make_rational(k.p, k.q);
      const IsolatedRoot r = refine(isolate_theta2(m), make_rational(1, 64 * k.q * k.q * k.q * k.q));
      // Convergents alternate around theta2, starting below it.
      CHECK(r.compare(approx) == (k.index % 2 == 0 ? -1 : 1));
      const Rational bound = make_rational(1, k.q * k.q);
      CHECK(abs(r.lo() - approx) < bound);
      CHECK(abs(r.hi() - approx) < bound);
    }
  }
}

TEST_CASE("convergent denominators for m = 14k") {
  for (long k = 2; k <= 60; ++k) {
    const BigInt m = 14 * k;
    const auto q = [&] {
      std::vector<BigInt> out;
      for (const auto& c : convergents(cf_expand(isolate_theta2(m), 10))) out.push_back(c.q);
      return out;
    }();
    const BigInt m2 = m * m, m3 = m2 * m, m4 = m3 * m;
    CHECK(q[1] == 1);
    CHECK(q[2] == m + 2);
    CHECK(2 * q[3] == m2 + 2 * m + 2);
    CHECK(2 * q[4] == m2 + 4 * m + 6);
    CHECK(q[5] == 2 * m2 + 7 * m + 10);
    CHECK(7 * q[6] == m3 - 7 * m2 - 30 * m - 49);
    CHECK(7 * q[7] == (m + 3) * (m2 + 4 * m + 7));
    CHECK(q[8] == m3 + 5 * m2 + 12 * m + 11);
    const long r = m.get_si() % 42;
    if (r == 0) CHECK(42 * q[9] == 7 * m4 + 41 * m3 + 126 * m2 + 191 * m + 126);
    if (r == 14) CHECK(42 * q[9] == 7 * m4 + 27 * m3 + 56 * m2 + 23 * m - 28);
    if (r == 28) CHECK(42 * q[9] == 7 * m4 + 13 * m3 - 14 * m2 - 145 * m - 182);
  }
}
