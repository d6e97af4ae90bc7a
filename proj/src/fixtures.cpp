#include "thue/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace thue::fixtures {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> data_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return out;
}

BigInt parse_int(const std::string& file, const Line& line, const std::string& tok) {
  try {
    return parse_bigint(tok);
  } catch (const std::exception&) {
    throw FixtureError(file, line.number, "bad integer '" + tok + "'");
  }
}

std::pair<std::string, std::string> split_point(const std::string& file, const Line& line,
                                                const std::string& tok) {
  const auto comma = tok.find(',');
  if (tok.size() < 5 || tok.front() != '(' || tok.back() != ')' || comma == std::string::npos) {
    throw FixtureError(file, line.number, "bad point '" + tok + "'");
  }
  return {tok.substr(1, comma - 1), tok.substr(comma + 1, tok.size() - comma - 2)};
}

Point parse_point(const std::string& file, const Line& line, const std::string& tok) {
  const auto [x, y] = split_point(file, line, tok);
  return {parse_int(file, line, x), parse_int(file, line, y)};
}

FactoredValue parse_factored_at(const std::string& file, const Line& line, const std::string& tok) {
  try {
    return parse_factored(tok);
  } catch (const std::exception& e) {
    throw FixtureError(file, line.number, e.what());
  }
}

}  // namespace

FixtureError::FixtureError(const std::string& file, std::size_t line, const std::string& what)
    : std::runtime_error(file + ":" + std::to_string(line) + ": " + what) {}

FactoredValue parse_factored(const std::string& token) {
  FactoredValue out;
  out.text = token;
  std::string product = token;
  std::optional<BigInt> stated;
  if (const auto eq = token.find('='); eq != std::string::npos) {
    stated = parse_bigint(token.substr(0, eq));
    product = token.substr(eq + 1);
  }

  std::vector<PrimePower> factors;
  std::size_t pos = 0;
  while (pos <= product.size()) {
    const std::size_t end = std::min(product.find('*', pos), product.size());
    const std::string term = product.substr(pos, end - pos);
    const auto caret = term.find('^');
    PrimePower pp;
    pp.prime = parse_bigint(term.substr(0, caret));
    pp.exponent = caret == std::string::npos ? 1 : std::stoul(term.substr(caret + 1));
    factors.push_back(pp);
    if (end == product.size()) break;
    pos = end + 1;
  }

  // A bare composite such as "9" is a plain value, not a factorization.
  const bool bare = factors.size() == 1 && product.find('^') == std::string::npos;
  if (bare && !is_prime(factors.front().prime)) {
    out.value = factors.front().prime;
  } else {
    out.factors = Factorization::from_factors(factors);
    out.value = out.factors->value();
  }
  if (stated && *stated != out.value) {
    throw std::invalid_argument("'" + token + "': stated value differs from the product");
  }
  return out;
}

LinearExpr parse_linear(const std::string& token) {
  if (token.empty()) throw std::invalid_argument("empty linear expression");
  LinearExpr out{0, 0};
  std::size_t pos = 0;
  while (pos < token.size()) {
    int sgn = 1;
    if (token[pos] == '+' || token[pos] == '-') {
      sgn = token[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t digits_end = pos;
    while (digits_end < token.size() && std::isdigit(static_cast<unsigned char>(token[digits_end]))) {
      ++digits_end;
    }
    const bool has_digits = digits_end > pos;
    const BigInt coeff = has_digits ? parse_bigint(token.substr(pos, digits_end - pos)) : BigInt(1);
    pos = digits_end;
    if (pos < token.size() && token[pos] == 'm') {
      out.a += sgn * coeff;
      ++pos;
    } else if (has_digits) {
      out.b += sgn * coeff;
    } else {
      throw std::invalid_argument("bad linear expression '" + token + "'");
    }
    if (pos < token.size() && token[pos] != '+' && token[pos] != '-') {
      throw std::invalid_argument("bad linear expression '" + token + "'");
    }
  }
  return out;
}

std::vector<SolutionRow> SolutionTable::corrected_rows() const {
  std::vector<SolutionRow> out = rows;
  for (const auto& e : errata) {
    SolutionRow& row = out.at(e.row - 1);
    if (e.column == "xy(x+y)") row.cross = parse_bigint(e.corrected);
  }
  return out;
}

SolutionTable parse_solution_table(std::string_view text) {
  static const std::string file = "solutions.txt";
  SolutionTable table;
  for (const Line& line : data_lines(text)) {
    const auto& t = line.tokens;
    if (t.front() == "erratum") {
      if (t.size() != 5) throw FixtureError(file, line.number, "erratum needs row, column, printed, corrected");
      Erratum e{line.number, std::stoul(t[1]), t[2], t[3], t[4]};
      if (e.row == 0 || e.row > table.rows.size()) throw FixtureError(file, line.number, "erratum row out of range");
      if (e.column != "xy(x+y)") throw FixtureError(file, line.number, "unsupported erratum column " + e.column);
      const SolutionRow& row = table.rows[e.row - 1];
      if (parse_int(file, line, e.printed) != row.cross) {
        throw FixtureError(file, line.number, "erratum printed value differs from the row");
      }
      const Point& p = row.solutions.front();
      if (parse_int(file, line, e.corrected) != cross_term(p.x, p.y)) {
        throw FixtureError(file, line.number, "erratum correction is not implied by the row's solutions");
      }
      table.errata.push_back(e);
      continue;
    }
    if (t.size() != 10) throw FixtureError(file, line.number, "expected 10 columns");
    SolutionRow row;
    row.line = line.number;
    row.row = table.rows.size() + 1;
    row.m = parse_int(file, line, t[0]);
    row.N = parse_int(file, line, t[1]);
    row.minus_N_minus_3 = parse_int(file, line, t[2]);
    row.two_m_plus_3 = parse_int(file, line, t[3]);
    row.lambda = parse_factored_at(file, line, t[4]);
    row.disc = parse_factored_at(file, line, t[5]);
    row.cross = parse_int(file, line, t[6]);
    for (std::size_t i = 0; i < 3; ++i) row.solutions[i] = parse_point(file, line, t[7 + i]);
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<ConductorRow> parse_conductor_rows(std::string_view text) {
  static const std::string file = "equal_conductor.txt";
  std::vector<ConductorRow> out;
  for (const Line& line : data_lines(text)) {
    const auto& t = line.tokens;
    if (t.size() != 5) throw FixtureError(file, line.number, "expected 5 columns");
    out.push_back({line.number, parse_int(file, line, t[0]), parse_factored_at(file, line, t[1]),
                   parse_int(file, line, t[2]), parse_factored_at(file, line, t[3]),
                   parse_factored_at(file, line, t[4])});
  }
  return out;
}

OverlapList parse_overlap_list(std::string_view text) {
  static const std::string file = "overlaps.txt";
  OverlapList out;
  bool have_range = false;
  for (const Line& line : data_lines(text)) {
    const auto& t = line.tokens;
    if (t.size() != 3) throw FixtureError(file, line.number, "expected 3 fields");
    const BigInt a = parse_int(file, line, t[1]);
    const BigInt b = parse_int(file, line, t[2]);
    if (t[0] == "range") {
      out.lo = a;
      out.hi = b;
      have_range = true;
    } else if (t[0] == "pair") {
      if (!(a < b)) throw FixtureError(file, line.number, "pair must be increasing");
      out.pairs.emplace_back(a, b);
    } else {
      throw FixtureError(file, line.number, "unknown record '" + t[0] + "'");
    }
  }
  if (!have_range) throw FixtureError(file, 0, "missing range record");
  return out;
}

std::vector<NormBlock> parse_norm_blocks(std::string_view text) {
  static const std::string file = "full_norm.txt";
  std::vector<NormBlock> out;
  for (const Line& line : data_lines(text)) {
    const auto& t = line.tokens;
    if (t.size() < 2) throw FixtureError(file, line.number, "expected m and points");
    NormBlock block{line.number, parse_int(file, line, t[0]), {}};
    for (std::size_t i = 1; i < t.size(); ++i) block.solutions.push_back(parse_point(file, line, t[i]));
    out.push_back(std::move(block));
  }
  return out;
}

std::vector<SmallLambdaEntry> parse_small_lambda(std::string_view text) {
  static const std::string file = "small_lambda.txt";
  std::vector<SmallLambdaEntry> out;
  for (const Line& line : data_lines(text)) {
    const auto& t = line.tokens;
    if (t.size() < 3) throw FixtureError(file, line.number, "expected m, lambda and points");
    SmallLambdaEntry e;
    e.line = line.number;
    try {
      if (t[0] != "*") e.m = parse_bigint(t[0]);
      e.lambda = parse_linear(t[1]);
      for (std::size_t i = 2; i < t.size(); ++i) {
        const auto [x, y] = split_point(file, line, t[i]);
        e.points.emplace_back(parse_linear(x), parse_linear(y));
      }
    } catch (const FixtureError&) {
      throw;
    } catch (const std::exception& ex) {
      throw FixtureError(file, line.number, ex.what());
    }
    if (e.m && (e.lambda.a != 0 || std::any_of(e.points.begin(), e.points.end(), [](const auto& p) {
                  return p.first.a != 0 || p.second.a != 0;
                }))) {
      throw FixtureError(file, line.number, "entries for a fixed m must be constants");
    }
    out.push_back(std::move(e));
  }
  return out;
}

SolutionTable solution_table() { return parse_solution_table(text::solutions()); }
std::vector<ConductorRow> conductor_rows() { return parse_conductor_rows(text::equal_conductor()); }
OverlapList overlap_list() { return parse_overlap_list(text::overlaps()); }
std::vector<NormBlock> norm_blocks() { return parse_norm_blocks(text::full_norm()); }
std::vector<SmallLambdaEntry> small_lambda_entries() { return parse_small_lambda(text::small_lambda()); }

}  // namespace thue::fixtures
