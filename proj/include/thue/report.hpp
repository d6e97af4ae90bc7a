#pragma once

// Deterministic text, JSON and CSV renderings of solver, classifier,
// conductor and continued-fraction results. Numbers are always plain
// decimal; JSON objects keep a fixed key order and carry "schema": 1.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thue/cf.hpp"
#include "thue/isofield.hpp"
#include "thue/solver.hpp"

namespace thue {

enum class Format { Text, Json, Csv };

std::optional<Format> parse_format(std::string_view name);

/// One orbit laid out like a row of the usual solution table.
struct TableRow {
  BigInt m;
  BigInt N;
  BigInt minus_N_minus_3;
  BigInt two_m_plus_3;
  BigInt lambda;
  Factorization lambda_factors;
  BigInt disc;
  Factorization disc_factors;
  BigInt cross;
  std::array<Point, 3> solutions;  // display order
};

/// Rows for every orbit of `set`. Throws std::logic_error if an orbit has
/// no integral N.
std::vector<TableRow> table_rows(const SolutionSet& set);
std::vector<TableRow> table_rows(const std::vector<SolutionSet>& sets);

/// "189=3^3*7" for composites, "13" for primes, "1" for the unit.
std::string value_with_factors(const BigInt& value, const Factorization& f);

std::string render_solutions(const SolutionSet& set, Format format);
std::string render_range(const RangeResult& result, const BigInt& lo, const BigInt& hi, Format format);

/// Isomorphism witness for a pair in the same class, with a solution
/// (x, y) of F_m = lambda whose N-image names the partner when one exists.
struct PairWitness {
  IsoWitness iso;
  std::optional<SolutionWitness> solution;
};

std::optional<PairWitness> pair_witness(const BigInt& m, const BigInt& n);

std::string render_classification(const Classification& c, Format format);
std::string render_conductor(const BigInt& m, const Conductor& c, Format format);
std::string render_cf(const BigInt& m, const ContinuedFraction& cf, Format format);

}  // namespace thue
