#pragma once

// Deciding L_m = L_n for simplest cubic fields: the M1/M2 splitting test,
// the solution-to-partner map, conductors, and range classification.

#include <cstddef>
#include <optional>
#include <vector>

#include "thue/arith.hpp"
#include "thue/family.hpp"

namespace thue {

enum class SplitWhich { M1, M2 };

const char* to_string(SplitWhich which);

struct SplitParams {
  Rational m1;  // -(mn + 3m + 9) / (m - n)
  Rational m2;  // (mn - 9) / (m + n + 3)
};

/// Throws std::invalid_argument when n == m (pole of M1) or n == -m-3
/// (pole of M2).
SplitParams m_params(const BigInt& m, const BigInt& n);

/// A rational root of f_M if f_M has one. f_M has cyclic Galois group
/// whenever it is irreducible, so one rational root means it splits.
std::optional<Rational> splits_completely(const Rational& M);

/// N = m + (m^2+3m+9) x y (x+y) / F_m(x, y) when the quotient is an
/// integer. Throws std::domain_error if F_m(x, y) == 0.
std::optional<BigInt> n_from_solution(const BigInt& m, const BigInt& x, const BigInt& y);

/// The index >= -1 among {N, -N-3}.
BigInt partner_index(const BigInt& N);

struct SolutionWitness {
  Point point;
  BigInt N;
};

struct IsoWitness {
  BigInt m;
  BigInt n;
  SplitWhich which = SplitWhich::M1;
  Rational rational_root;
  std::optional<SolutionWitness> solution;
};

struct IsoResult {
  bool isomorphic = false;
  std::optional<IsoWitness> witness;  // absent for identical indices
};

/// Both indices are normalised to >= -1 first; equal indices are trivially
/// isomorphic.
IsoResult is_isomorphic(const BigInt& m, const BigInt& n);

/// Throws std::logic_error when f_m unexpectedly has a rational root.
void assert_irreducible(const BigInt& m);

/// Witness built from a solution (x, y) of F_m: its N-map image is checked
/// against the splitting test. nullopt if the pair gives no integer N or
/// the fields differ.
std::optional<IsoWitness> witness_from_solution(const BigInt& m, const BigInt& x, const BigInt& y);

struct Conductor {
  BigInt m;
  BigInt f;
  unsigned three_part = 1;  // 1 or 9
  std::vector<BigInt> odd_primes;
};

/// Conductor of L_m. m is normalised to >= -1 first.
Conductor conductor(const BigInt& m);

class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  std::size_t find(std::size_t x);
  bool unite(std::size_t a, std::size_t b);

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
};

struct Classification {
  BigInt lo;
  BigInt hi;
  /// Every index in [lo, hi] appears in exactly one class; classes and
  /// their members are sorted ascending.
  std::vector<std::vector<BigInt>> classes;

  std::vector<std::vector<BigInt>> nontrivial() const;
  std::vector<std::pair<BigInt, BigInt>> pairs() const;
};

/// Groups [lo, hi] (lo >= -1) by field. Conductor equality buckets first,
/// then pairwise splitting tests inside each bucket.
Classification classify_range(const BigInt& lo, const BigInt& hi, unsigned workers = 0);

}  // namespace thue
