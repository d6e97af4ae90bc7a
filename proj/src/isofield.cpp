#include "thue/isofield.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "thue/cf.hpp"
#include "thue/parallel.hpp"

namespace thue {

const char* to_string(SplitWhich which) { return which == SplitWhich::M1 ? "M1" : "M2"; }

SplitParams m_params(const BigInt& m, const BigInt& n) {
  if (n == m) throw std::invalid_argument("m_params: n == m makes M1 undefined");
  if (n == -m - 3) throw std::invalid_argument("m_params: n == -m-3 makes M2 undefined");
  return {make_rational(-(m * n + 3 * m + 9), m - n), make_rational(m * n - 9, m + n + 3)};
}

std::optional<Rational> splits_completely(const Rational& M) {
  const auto roots = rational_roots(poly_fm(M));
  if (roots.empty()) return std::nullopt;
  return roots.front();
}

std::optional<BigInt> n_from_solution(const BigInt& m, const BigInt& x, const BigInt& y) {
  const BigInt f = eval_form(m, x, y);
  if (f == 0) throw std::domain_error("n_from_solution: F_m(x, y) == 0");
  const BigInt numerator = sqrt_disc(m) * cross_term(x, y);
  if (!mpz_divisible_p(numerator.get_mpz_t(), f.get_mpz_t())) return std::nullopt;
  BigInt quotient;
  mpz_divexact(quotient.get_mpz_t(), numerator.get_mpz_t(), f.get_mpz_t());
  return m + quotient;
}

BigInt partner_index(const BigInt& N) { return normalize_index(N).m; }

void assert_irreducible(const BigInt& m) {
  const CubicPoly f = poly_fm(Rational(m));
  if (f.eval(1) == 0 || f.eval(-1) == 0) {
    throw std::logic_error("f_m has a rational root for m = " + to_string(m));
  }
}

IsoResult is_isomorphic(const BigInt& m_in, const BigInt& n_in) {
  const BigInt m = normalize_index(m_in).m;
  const BigInt n = normalize_index(n_in).m;
  if (m == n) return {true, std::nullopt};
  assert_irreducible(m);
  assert_irreducible(n);
  const SplitParams params = m_params(m, n);
  if (auto root = splits_completely(params.m1)) {
    return {true, IsoWitness{m, n, SplitWhich::M1, *root, std::nullopt}};
  }
  if (auto root = splits_completely(params.m2)) {
    return {true, IsoWitness{m, n, SplitWhich::M2, *root, std::nullopt}};
  }
  return {false, std::nullopt};
}

std::optional<IsoWitness> witness_from_solution(const BigInt& m, const BigInt& x, const BigInt& y) {
  const auto N = n_from_solution(m, x, y);
  if (!N) return std::nullopt;
  const BigInt partner = partner_index(*N);
  if (partner == normalize_index(m).m) return std::nullopt;
  IsoResult result = is_isomorphic(m, partner);
  if (!result.isomorphic || !result.witness) return std::nullopt;
  result.witness->solution = SolutionWitness{{x, y}, *N};
  return result.witness;
}

Conductor conductor(const BigInt& m_in) {
  const BigInt m = normalize_index(m_in).m;
  Conductor c;
  c.m = m;
  c.f = 1;
  const Factorization disc = factor(sqrt_disc(m));
  for (const auto& pp : disc.factors()) {
    if (pp.prime == 3 || pp.exponent % 3 == 0) continue;
    c.odd_primes.push_back(pp.prime);
    c.f *= pp.prime;
  }
  // m >= -1 here; shift by 27 keeps the residues non-negative.
  const BigInt shifted = m + 27;
  const unsigned long mod3 = mpz_fdiv_ui(shifted.get_mpz_t(), 3);
  const unsigned long mod27 = mpz_fdiv_ui(shifted.get_mpz_t(), 27);
  if (mod3 == 0 && mod27 != 12) {
    c.three_part = 9;
    c.f *= 9;
  }
  return c;
}

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
  std::size_t root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    const std::size_t next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  return true;
}

std::vector<std::vector<BigInt>> Classification::nontrivial() const {
  std::vector<std::vector<BigInt>> out;
  for (const auto& c : classes) {
    if (c.size() > 1) out.push_back(c);
  }
  return out;
}

std::vector<std::pair<BigInt, BigInt>> Classification::pairs() const {
  std::vector<std::pair<BigInt, BigInt>> out;
  for (const auto& c : classes) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) out.emplace_back(c[i], c[j]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Classification classify_range(const BigInt& lo, const BigInt& hi, unsigned workers) {
  if (lo < -1) throw std::invalid_argument("classify_range: lo must be >= -1");
  if (hi < lo) throw std::invalid_argument("classify_range: empty range");
  const BigInt span = hi - lo + 1;
  if (!span.fits_ulong_p()) throw std::invalid_argument("classify_range: range too large");
  const std::size_t count = span.get_ui();

  std::vector<BigInt> conductors(count);
  parallel_for(count, workers, [&](std::size_t i) { conductors[i] = conductor(lo + BigInt(i)).f; });

  // Only indices sharing a conductor can share a field.
  std::map<BigInt, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < count; ++i) buckets[conductors[i]].push_back(i);
  std::vector<const std::vector<std::size_t>*> shared;
  for (const auto& [f, members] : buckets) {
    if (members.size() > 1) shared.push_back(&members);
  }

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> edges(shared.size());
  parallel_for(shared.size(), workers, [&](std::size_t b) {
    const auto& members = *shared[b];
    UnionFind local(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (local.find(i) == local.find(j)) continue;
        if (is_isomorphic(lo + BigInt(members[i]), lo + BigInt(members[j])).isomorphic) {
          local.unite(i, j);
          edges[b].emplace_back(members[i], members[j]);
        }
      }
    }
  });

  UnionFind uf(count);
  for (const auto& bucket_edges : edges) {
    for (const auto& [a, b] : bucket_edges) uf.unite(a, b);
  }
  std::map<std::size_t, std::vector<BigInt>> grouped;
  for (std::size_t i = 0; i < count; ++i) grouped[uf.find(i)].push_back(lo + BigInt(i));

  Classification result{lo, hi, {}};
  result.classes.reserve(grouped.size());
  for (auto& [root, members] : grouped) result.classes.push_back(std::move(members));
  std::sort(result.classes.begin(), result.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return result;
}

}  // namespace thue
