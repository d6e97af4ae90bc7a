#include "doctest.h"
#include "oracles.hpp"
#include "thue/fixtures.hpp"
#include "thue/isofield.hpp"

using namespace thue;

TEST_CASE("splitting parameters") {
  const SplitParams a = m_params(-1, 5);
  CHECK(a.m1 == make_rational(1, 6));
  CHECK(a.m2 == -2);
  const SplitParams b = m_params(0, 3);
  CHECK(b.m1 == 3);
  CHECK(b.m2 == make_rational(-3, 2));
  CHECK_THROWS_AS(m_params(0, -3), std::invalid_argument);
  CHECK_THROWS_AS(m_params(4, 4), std::invalid_argument);
}

TEST_CASE("complete splitting by rational roots") {
  CHECK(splits_completely(make_rational(1, 6)) == make_rational(-3, 2));
  CHECK(splits_completely(make_rational(-3, 2)) == Rational(-2));
  CHECK_FALSE(splits_completely(Rational(3)).has_value());
  // Every root found must be an exact root.
  for (long num = -30; num <= 30; ++num) {
    for (long den = 1; den <= 12; ++den) {
      const Rational M = make_rational(num, den);
      if (const auto r = splits_completely(M)) CHECK(poly_fm(M).eval(*r) == 0);
    }
  }
}

TEST_CASE("N-map") {
  CHECK(n_from_solution(-1, 2, 1) == BigInt(5));
  CHECK(n_from_solution(5, 19, 3) == BigInt(1259));
  for (long m = -1; m <= 20; ++m) CHECK(n_from_solution(m, 1, 0) == BigInt(m));
  CHECK_THROWS_AS(n_from_solution(0, 0, 0), std::domain_error);
  // The map is constant on orbits and invariant under scaling.
  const OrbitClass o = orbit(19, 3);
  for (const auto& p : o.members()) CHECK(n_from_solution(5, p.x, p.y) == BigInt(1259));
  CHECK(n_from_solution(5, 38, 6) == BigInt(1259));
  CHECK(partner_index(-1262) == 1259);
  CHECK(partner_index(5) == 5);
  CHECK(partner_index(-2) == -1);
}

TEST_CASE("isomorphism") {
  CHECK(is_isomorphic(1, 66).isomorphic);
  CHECK_FALSE(is_isomorphic(13, 201).isomorphic);
  CHECK(is_isomorphic(7, 7).isomorphic);
  for (long m = -1; m <= 300; ++m) CHECK(is_isomorphic(m, -m - 3).isomorphic);

  const IsoResult r = is_isomorphic(-1, 5);
  REQUIRE(r.witness.has_value());
  const Rational M = r.witness->which == SplitWhich::M1 ? m_params(-1, 5).m1 : m_params(-1, 5).m2;
  CHECK(poly_fm(M).eval(r.witness->rational_root) == 0);
}

TEST_CASE("exactly one of M1, M2 splits for isomorphic pairs") {
  const std::vector<std::pair<long, long>> pairs = {{-1, 5}, {-1, 12}, {-1, 1259}, {5, 12}, {5, 1259}, {12, 1259},
                                                    {0, 3},  {0, 54},  {3, 54},    {1, 66}, {2, 2389}};
  for (const auto& [m, n] : pairs) {
    const SplitParams p = m_params(m, n);
    const bool s1 = splits_completely(p.m1).has_value();
    const bool s2 = splits_completely(p.m2).has_value();
    CHECK_MESSAGE(s1 != s2, m << ", " << n);
  }
  for (const auto& row : fixtures::conductor_rows()) {
    const SplitParams p = m_params(row.m, row.n);
    CHECK_FALSE(splits_completely(p.m1).has_value());
    CHECK_FALSE(splits_completely(p.m2).has_value());
  }
}

TEST_CASE("witness from a printed solution") {
  const auto w = witness_from_solution(5, 19, 3);
  REQUIRE(w.has_value());
  CHECK(w->n == 1259);
  REQUIRE(w->solution.has_value());
  CHECK(w->solution->N == 1259);
  CHECK_FALSE(witness_from_solution(4, 1, 0).has_value());
}

TEST_CASE("conductors") {
  CHECK(conductor(13).f == 217);
  CHECK(conductor(516).f == 89271);
  CHECK(conductor(12).f == 7);
  CHECK(conductor(-1).f == 7);
  CHECK(conductor(-5).f == conductor(2).f);
}

TEST_CASE("conductor invariants") {
  for (long m = -1; m <= 3000; ++m) {
    const Conductor c = conductor(m);
    const std::int64_t d = m * m + 3 * m + 9;
    BigInt product = c.three_part;
    for (const auto& p : c.odd_primes) {
      CHECK(p != 3);
      CHECK(d % p.get_si() == 0);
      product *= p;
    }
    CHECK(product == c.f);
    CHECK((c.three_part == 1 || c.three_part == 9));
    for (const auto& [p, e] : oracle::factor(c.f.get_ui())) {
      if (p != 3) CHECK(e == 1);
      if (p == 3) CHECK(e == 2);
    }
  }
}

TEST_CASE("classification") {
  const Classification small = classify_range(-1, 100);
  const auto nt = small.nontrivial();
  REQUIRE(nt.size() == 3);
  CHECK(nt[0] == std::vector<BigInt>{-1, 5, 12});
  CHECK(nt[1] == std::vector<BigInt>{0, 3, 54});
  CHECK(nt[2] == std::vector<BigInt>{1, 66});
  CHECK(small.classes.size() == 102 - 5);

  const Classification single = classify_range(4, 4);
  CHECK(single.classes.size() == 1);
  CHECK(single.pairs().empty());
  CHECK_THROWS_AS(classify_range(-2, 5), std::invalid_argument);
  CHECK_THROWS_AS(classify_range(5, 4), std::invalid_argument);
}

TEST_CASE("classification does not depend on the worker count") {
  const auto one = classify_range(-1, 1500, 1).classes;
  const auto four = classify_range(-1, 1500, 4).classes;
  CHECK(one == four);
}

TEST_CASE("union-find") {
  UnionFind uf(6);
  CHECK(uf.unite(0, 1));
  CHECK(uf.unite(1, 2));
  CHECK_FALSE(uf.unite(0, 2));
  CHECK(uf.find(2) == uf.find(0));
  CHECK(uf.find(3) != uf.find(0));
}
