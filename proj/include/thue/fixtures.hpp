#pragma once

// Parsers for the golden data embedded from data/*.txt. Every parser keeps
// the source line of each record so diffs can point back at the file.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thue/arith.hpp"
#include "thue/family.hpp"

namespace thue::fixtures {

namespace text {
std::string_view solutions();
std::string_view equal_conductor();
std::string_view overlaps();
std::string_view full_norm();
std::string_view small_lambda();
}  // namespace text

class FixtureError : public std::runtime_error {
 public:
  FixtureError(const std::string& file, std::size_t line, const std::string& what);
};

/// A value printed as "189=3^3*7", "3^2*7^3", "7^2" or "13". `factors` is
/// set only when the printed form is a product of prime powers or a prime.
struct FactoredValue {
  BigInt value;
  std::optional<Factorization> factors;
  std::string text;
};

FactoredValue parse_factored(const std::string& token);

struct SolutionRow {
  std::size_t line = 0;
  std::size_t row = 0;  // 1-based position among data rows
  BigInt m;
  BigInt N;
  BigInt minus_N_minus_3;
  BigInt two_m_plus_3;
  FactoredValue lambda;
  FactoredValue disc;
  BigInt cross;
  std::array<Point, 3> solutions;
};

/// A printed value that contradicts the rest of its row, replaced by the
/// value the row's own solutions imply.
struct Erratum {
  std::size_t line = 0;
  std::size_t row = 0;
  std::string column;
  std::string printed;
  std::string corrected;
};

struct SolutionTable {
  std::vector<SolutionRow> rows;  // as printed
  std::vector<Erratum> errata;

  /// Rows with every erratum applied.
  std::vector<SolutionRow> corrected_rows() const;
};

struct ConductorRow {
  std::size_t line = 0;
  BigInt m;
  FactoredValue disc_m;
  BigInt n;
  FactoredValue disc_n;
  FactoredValue conductor;
};

struct OverlapList {
  BigInt lo;
  BigInt hi;
  std::vector<std::pair<BigInt, BigInt>> pairs;  // as listed, each with first < second
};

struct NormBlock {
  std::size_t line = 0;
  BigInt m;
  std::vector<Point> solutions;
};

/// a * m + b.
struct LinearExpr {
  BigInt a;
  BigInt b;

  BigInt at(const BigInt& m) const { return a * m + b; }
};

LinearExpr parse_linear(const std::string& token);

struct SmallLambdaEntry {
  std::size_t line = 0;
  std::optional<BigInt> m;  // nullopt: every m >= -1
  LinearExpr lambda;
  std::vector<std::pair<LinearExpr, LinearExpr>> points;
};

SolutionTable solution_table();
std::vector<ConductorRow> conductor_rows();
OverlapList overlap_list();
std::vector<NormBlock> norm_blocks();
std::vector<SmallLambdaEntry> small_lambda_entries();

// Parsers on explicit text, used by the loaders above and by tests.
SolutionTable parse_solution_table(std::string_view text);
std::vector<ConductorRow> parse_conductor_rows(std::string_view text);
OverlapList parse_overlap_list(std::string_view text);
std::vector<NormBlock> parse_norm_blocks(std::string_view text);
std::vector<SmallLambdaEntry> parse_small_lambda(std::string_view text);

}  // namespace thue::fixtures
