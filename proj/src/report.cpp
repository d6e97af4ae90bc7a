#include "thue/report.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace thue {

namespace {

using Json = nlohmann::ordered_json;

// Integers that fit a signed long become JSON numbers; larger ones are
// emitted as decimal strings rather than losing precision.
Json json_int(const BigInt& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(to_string(v));
}

Json json_point(const Point& p) { return Json::array({json_int(p.x), json_int(p.y)}); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string point_text(const Point& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

std::string points_text(const std::array<Point, 3>& pts) {
  return point_text(pts[0]) + " " + point_text(pts[1]) + " " + point_text(pts[2]);
}

const char* kCsvHeader = "m,N,-N-3,2m+3,lambda,m^2+3m+9,xy(x+y),solutions\n";

std::string csv_row(const TableRow& r) {
  std::ostringstream out;
  out << r.m << ',' << r.N << ',' << r.minus_N_minus_3 << ',' << r.two_m_plus_3 << ','
      << value_with_factors(r.lambda, r.lambda_factors) << ',' << r.disc_factors.to_string() << ','
      << r.cross << ",\"" << points_text(r.solutions) << "\"\n";
  return out.str();
}

std::string text_row(const TableRow& r) {
  std::ostringstream out;
  out << "m=" << r.m << " N=" << r.N << " -N-3=" << r.minus_N_minus_3 << " 2m+3=" << r.two_m_plus_3
      << " lambda=" << value_with_factors(r.lambda, r.lambda_factors)
      << " m^2+3m+9=" << r.disc_factors.to_string() << " xy(x+y)=" << r.cross << "  "
      << points_text(r.solutions) << "\n";
  return out.str();
}

Json json_set(const SolutionSet& set) {
  Json orbits = Json::array();
  for (const auto& o : set.orbits) {
    Json sols = Json::array();
    for (const auto& p : o.orbit.display_order()) sols.push_back(json_point(p));
    Json entry;
    entry["lambda"] = json_int(o.lambda);
    entry["solutions"] = std::move(sols);
    entry["N"] = o.N ? json_int(*o.N) : Json(nullptr);
    entry["partner"] = o.N ? json_int(partner_index(*o.N)) : Json(nullptr);
    orbits.push_back(std::move(entry));
  }
  Json j;
  j["m"] = json_int(set.m);
  j["orbits"] = std::move(orbits);
  j["certificate"] = to_string(set.certificate);
  return j;
}

Json json_witness(const PairWitness& w) {
  Json j;
  j["m"] = json_int(w.iso.m);
  j["n"] = json_int(w.iso.n);
  j["which"] = to_string(w.iso.which);
  j["root_num"] = json_int(w.iso.rational_root.get_num());
  j["root_den"] = json_int(w.iso.rational_root.get_den());
  j["x"] = w.solution ? json_int(w.solution->point.x) : Json(nullptr);
  j["y"] = w.solution ? json_int(w.solution->point.y) : Json(nullptr);
  j["N"] = w.solution ? json_int(w.solution->N) : Json(nullptr);
  return j;
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  return std::nullopt;
}

std::vector<TableRow> table_rows(const SolutionSet& set) {
  std::vector<TableRow> rows;
  const BigInt disc = sqrt_disc(set.m);
  const Factorization disc_factors = factor(disc);
  for (const auto& o : set.orbits) {
    if (!o.N) throw std::logic_error("orbit without integral N at m = " + to_string(set.m));
    rows.push_back({set.m, *o.N, -*o.N - 3, 2 * set.m + 3, o.lambda, factor(o.lambda), disc, disc_factors,
                    o.cross(), o.orbit.display_order()});
  }
  return rows;
}

std::vector<TableRow> table_rows(const std::vector<SolutionSet>& sets) {
  std::vector<TableRow> rows;
  for (const auto& s : sets) {
    auto part = table_rows(s);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

std::string value_with_factors(const BigInt& value, const Factorization& f) {
  const std::string factored = f.to_string();
  const std::string plain = to_string(value);
  return factored == plain ? plain : plain + "=" + factored;
}

std::string render_solutions(const SolutionSet& set, Format format) {
  switch (format) {
    case Format::Json: {
      Json j;
      j["schema"] = 1;
      const Json body = json_set(set);
      for (const auto& [k, v] : body.items()) j[k] = v;
      return dump(j);
    }
    case Format::Csv: {
      std::string out = kCsvHeader;
      for (const auto& r : table_rows(set)) out += csv_row(r);
      return out;
    }
    case Format::Text: {
      std::ostringstream out;
      out << "m=" << set.m << " m^2+3m+9=" << factor(sqrt_disc(set.m)).to_string()
          << " certificate=" << to_string(set.certificate) << "\n";
      for (const auto& r : table_rows(set)) out << text_row(r);
      out << set.orbits.size() << " orbits, " << set.solution_count() << " solutions\n";
      return out.str();
    }
  }
  throw std::logic_error("unknown format");
}

std::string render_range(const RangeResult& result, const BigInt& lo, const BigInt& hi, Format format) {
  switch (format) {
    case Format::Json: {
      Json j;
      j["schema"] = 1;
      j["from"] = json_int(lo);
      j["to"] = json_int(hi);
      j["total_solutions"] = result.total_solutions();
      std::size_t bounded_only = 0;
      Json results = Json::array();
      for (const auto& s : result.sets) {
        if (s.certificate == Certificate::BoundedOnly) ++bounded_only;
        if (!s.orbits.empty()) results.push_back(json_set(s));
      }
      j["certificates"] = {{to_string(Certificate::BoundedOnly), bounded_only},
                           {to_string(Certificate::BoundedConvergent), result.sets.size() - bounded_only}};
      j["results"] = std::move(results);
      j["problems"] = result.problems;
      return dump(j);
    }
    case Format::Csv: {
      std::string out = kCsvHeader;
      for (const auto& r : table_rows(result.sets)) out += csv_row(r);
      return out;
    }
    case Format::Text: {
      std::ostringstream out;
      std::size_t orbit_count = 0;
      for (const auto& r : table_rows(result.sets)) {
        out << text_row(r);
        ++orbit_count;
      }
      out << orbit_count << " orbits, " << result.total_solutions() << " solutions for " << lo << " <= m <= " << hi
          << "\n";
      for (const auto& p : result.problems) out << "problem: " << p << "\n";
      return out.str();
    }
  }
  throw std::logic_error("unknown format");
}

std::optional<PairWitness> pair_witness(const BigInt& m, const BigInt& n) {
  const IsoResult iso = is_isomorphic(m, n);
  if (!iso.isomorphic || !iso.witness) return std::nullopt;
  PairWitness w{*iso.witness, std::nullopt};
  const BigInt target = normalize_index(n).m;
  const SolutionSet set = solve_family(m);
  for (const auto& o : set.orbits) {
    if (o.N && partner_index(*o.N) == target) {
      w.solution = SolutionWitness{o.orbit.display_order().front(), *o.N};
      break;
    }
  }
  return w;
}

std::string render_classification(const Classification& c, Format format) {
  const auto pairs = c.pairs();
  switch (format) {
    case Format::Json: {
      Json j;
      j["schema"] = 1;
      j["from"] = json_int(c.lo);
      j["to"] = json_int(c.hi);
      Json classes = Json::array();
      for (const auto& cls : c.nontrivial()) {
        Json members = Json::array();
        for (const auto& m : cls) members.push_back(json_int(m));
        classes.push_back(std::move(members));
      }
      j["classes"] = std::move(classes);
      Json pair_list = Json::array();
      for (const auto& [a, b] : pairs) {
        Json entry;
        entry["m"] = json_int(a);
        entry["n"] = json_int(b);
        const auto w = pair_witness(a, b);
        entry["witness"] = w ? json_witness(*w) : Json(nullptr);
        pair_list.push_back(std::move(entry));
      }
      j["pairs"] = std::move(pair_list);
      return dump(j);
    }
    case Format::Csv: {
      std::string out = "m,n\n";
      for (const auto& [a, b] : pairs) out += to_string(a) + "," + to_string(b) + "\n";
      return out;
    }
    case Format::Text: {
      std::ostringstream out;
      for (const auto& cls : c.nontrivial()) {
        out << "class:";
        for (const auto& m : cls) out << ' ' << m;
        out << "\n";
      }
      out << pairs.size() << " pairs with equal fields for " << c.lo << " <= m <= " << c.hi << "\n";
      return out.str();
    }
  }
  throw std::logic_error("unknown format");
}

std::string render_conductor(const BigInt& m, const Conductor& c, Format format) {
  Factorization f = factor(c.f);
  switch (format) {
    case Format::Json: {
      Json j;
      j["schema"] = 1;
      j["m"] = json_int(m);
      j["conductor"] = json_int(c.f);
      j["factored"] = f.to_string();
      j["three_part"] = json_int(c.three_part);
      Json primes = Json::array();
      for (const auto& p : c.odd_primes) primes.push_back(json_int(p));
      j["primes"] = std::move(primes);
      return dump(j);
    }
    case Format::Csv:
      return "m,conductor,factored\n" + to_string(m) + "," + to_string(c.f) + "," + f.to_string() + "\n";
    case Format::Text:
      return to_string(c.f) + "\n";
  }
  throw std::logic_error("unknown format");
}

std::string render_cf(const BigInt& m, const ContinuedFraction& cf, Format format) {
  switch (format) {
    case Format::Json: {
      Json j;
      j["schema"] = 1;
      j["m"] = json_int(m);
      Json q = Json::array();
      for (const auto& a : cf.quotients) q.push_back(json_int(a));
      j["quotients"] = std::move(q);
      Json conv = Json::array();
      for (const auto& c : convergents(cf)) conv.push_back({{"index", c.index}, {"p", json_int(c.p)}, {"q", json_int(c.q)}});
      j["convergents"] = std::move(conv);
      return dump(j);
    }
    case Format::Csv: {
      std::string out = "index,p,q\n";
      for (const auto& c : convergents(cf)) {
        out += std::to_string(c.index) + "," + to_string(c.p) + "," + to_string(c.q) + "\n";
      }
      return out;
    }
    case Format::Text:
      return format_cf(cf) + "\n";
  }
  throw std::logic_error("unknown format");
}

}  // namespace thue
