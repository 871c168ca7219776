#include "btws/cli.hpp"
#include "btws/error.hpp"
#include "btws/invariants.hpp"
#include "btws/notation.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#ifndef BTWS_DEFAULT_TABLE
#define BTWS_DEFAULT_TABLE "data/knots.csv"
#endif

namespace btws::cli {

namespace {

  [[noreturn]] void malformed(std::size_t line, std::string const& what) {
    throw Error(ErrorKind::MalformedTable, "line " + std::to_string(line) + ": " + what);
  }

  std::string trim(std::string_view s) {
    auto const b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
      return {};
    }
    return std::string(s.substr(b, s.find_last_not_of(" \t\r") - b + 1));
  }

  std::string read_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorKind::Io, "cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  // RFC 4180 style: quoted fields may contain commas, newlines and "".
  std::vector<std::pair<std::size_t, std::vector<std::string>>> csv_rows(std::string_view text) {
    std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
    std::vector<std::string>                                      row;
    std::string                                                   field;
    bool        quoted = false, any = false;
    std::size_t line = 1, start = 1;
    auto        finish = [&] {
      row.push_back(field);
      field.clear();
      bool const blank = row.size() == 1 && trim(row[0]).empty() && !any;
      if (!blank) {
        rows.emplace_back(start, std::move(row));
      }
      row.clear();
      any = false;
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
      char const ch = text[i];
      if (quoted) {
        if (ch == '"' && i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else if (ch == '"') {
          quoted = false;
        } else {
          line += ch == '\n';
          field += ch;
        }
      } else if (ch == '"') {
        quoted = any = true;
      } else if (ch == ',') {
        row.push_back(field);
        field.clear();
        any = true;
      } else if (ch == '\n') {
        finish();
        start = ++line;
      } else if (ch != '\r') {
        field += ch;
      }
    }
    if (quoted) {
      malformed(start, "unterminated quoted field");
    }
    if (!field.empty() || !row.empty()) {
      finish();
    }
    return rows;
  }

  std::optional<std::string> optional_field(std::string const& s) {
    std::string t = trim(s);
    return t.empty() ? std::nullopt : std::optional(t);
  }

  std::optional<Int> parse_positive(std::string const& s, std::size_t line) {
    auto const t = optional_field(s);
    if (!t) {
      return std::nullopt;
    }
    if (!std::all_of(t->begin(), t->end(), [](unsigned char c) { return std::isdigit(c); })) {
      malformed(line, "det must be a positive integer, got '" + *t + "'");
    }
    Int v(*t);
    if (v < 1) {
      malformed(line, "det must be positive");
    }
    return v;
  }

  class LinResolver {
   public:
    explicit LinResolver(std::filesystem::path base) : _base(std::move(base)) {}

    twistspin::LinPresentation resolve(std::string const& ref, std::size_t line) {
      auto const        hash = ref.find('#');
      std::string const file = hash == std::string::npos ? "lin.txt" : ref.substr(0, hash);
      std::string const name = hash == std::string::npos ? ref : ref.substr(hash + 1);
      auto const        path = _base / file;
      auto              it   = _cache.find(path.string());
      if (it == _cache.end()) {
        std::vector<twistspin::LinPresentation> records;
        try {
          records = twistspin::parse_lin_records(read_file(path));
        } catch (Error const& e) {
          malformed(line, "lin data " + path.string() + ": " + e.what());
        }
        it = _cache.emplace(path.string(), std::move(records)).first;
      }
      for (auto const& L : it->second) {
        if (L.name == name) {
          return L;
        }
      }
      malformed(line, "no Lin record '" + name + "' in " + path.string());
    }

   private:
    std::filesystem::path                                          _base;
    std::map<std::string, std::vector<twistspin::LinPresentation>> _cache;
  };

  std::string describe(Int const& v) { return btws::to_string(v); }

}  // namespace

KnotRecord const* KnotTable::find(std::string_view name) const {
  for (auto const& r : records) {
    if (r.name == name) {
      return &r;
    }
  }
  return nullptr;
}

IntMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<long>> rows;
  std::string                    normalized(text);
  std::replace(normalized.begin(), normalized.end(), '\n', ';');
  std::istringstream all(normalized);
  std::string        row_text;
  while (std::getline(all, row_text, ';')) {
    if (auto const hash = row_text.find('#'); hash != std::string::npos) {
      row_text.erase(hash);
    }
    std::istringstream row(row_text);
    std::vector<long>  entries;
    std::string        tok;
    while (row >> tok) {
      std::size_t used = 0;
      long        v    = 0;
      try {
        v = std::stol(tok, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != tok.size()) {
        throw Error(ErrorKind::MalformedToken, "matrix entry '" + tok + "'");
      }
      entries.push_back(v);
    }
    if (!entries.empty()) {
      rows.push_back(std::move(entries));
    }
  }
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) {
      throw Error(ErrorKind::MalformedToken, "matrix rows have different lengths");
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

std::string render_matrix(IntMatrix const& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i > 0) {
      out += ';';
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) {
        out += ' ';
      }
      out += btws::to_string(m(i, j));
    }
  }
  return out;
}

KnotTable parse_table(std::string_view csv, std::filesystem::path const& base_dir) {
  static std::vector<std::string> const header{"name", "pd", "seifert", "lin_ref", "det"};
  KnotTable                             table;
  auto const                            rows = csv_rows(csv);
  if (rows.empty()) {
    return table;
  }
  std::vector<std::string> head;
  for (auto const& f : rows[0].second) {
    head.push_back(trim(f));
  }
  if (head != header) {
    malformed(rows[0].first, "header must be name,pd,seifert,lin_ref,det");
  }
  LinResolver           lin(base_dir);
  std::set<std::string> seen;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    auto const& [line, fields] = rows[k];
    if (fields.size() != header.size()) {
      malformed(line, "expected 5 fields, got " + std::to_string(fields.size()));
    }
    KnotRecord r;
    r.name = trim(fields[0]);
    if (r.name.empty()) {
      malformed(line, "empty knot name");
    }
    if (!seen.insert(r.name).second) {
      malformed(line, "duplicate knot " + r.name);
    }
    r.pd = optional_field(fields[1]);
    if (r.pd && *r.pd == "-") {
      r.pd = "";  // explicit crossingless diagram
    }
    if (auto s = optional_field(fields[2])) {
      try {
        r.seifert = parse_matrix(*s);
        invariants::SeifertMatrix{*r.seifert}.validate();
      } catch (std::exception const& e) {
        malformed(line, r.name + ": seifert: " + e.what());
      }
    }
    if (r.pd) {
      try {
        (void)notation::parse_pd(*r.pd);
      } catch (Error const& e) {
        malformed(line, r.name + ": pd: " + e.what());
      }
    }
    if (!r.pd && !r.seifert) {
      malformed(line, r.name + ": needs a pd code or a Seifert matrix");
    }
    r.lin_ref = optional_field(fields[3]);
    if (r.lin_ref) {
      r.lin = lin.resolve(*r.lin_ref, line);
    }
    r.det_expected = parse_positive(fields[4], line);
    table.records.push_back(std::move(r));
  }
  return table;
}

KnotTable load_table(std::filesystem::path const& path) {
  KnotTable t = parse_table(read_file(path), path.parent_path());
  t.source    = path;
  return t;
}

std::filesystem::path default_table_path() {
  if (char const* env = std::getenv("TWISTSPIN_TABLE"); env != nullptr && *env != '\0') {
    return env;
  }
  return BTWS_DEFAULT_TABLE;
}

bool RecordReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](auto const& c) { return c.ok; });
}

std::optional<Int> RecordReport::determinant() const {
  if (fox) {
    return fox;
  }
  if (seifert) {
    return seifert;
  }
  return lin;
}

RecordReport check_record(KnotRecord const& r, bool thorough) {
  RecordReport report;
  report.knot = r.name;
  std::optional<notation::Diagram> diagram;
  if (r.pd) {
    diagram     = notation::parse_pd(*r.pd);
    report.fox  = invariants::determinant_of_poly(
        invariants::alexander_polynomial(invariants::wirtinger(*diagram)));
  }
  if (r.seifert) {
    report.seifert = invariants::determinant_of_seifert({*r.seifert});
  }
  if (r.lin) {
    report.lin = btws::abs(determinant(metabelian::character_condition_matrix(*r.lin)));
  }
  auto const det = report.determinant();
  auto       agree = [&](char const* name, std::optional<Int> const& v) {
    if (v && det) {
      bool const ok = *v == *det;
      report.checks.push_back(
          {name, ok, ok ? describe(*v) : describe(*v) + " != " + describe(*det)});
    }
  };
  agree("seifert", report.seifert);
  agree("lin", report.lin);
  if (r.det_expected) {
    agree("det_expected", r.det_expected);
  }
  if (det && *det % 2 == 0) {
    report.checks.push_back({"odd_determinant", false, describe(*det) + " is even"});
  }
  if (thorough && diagram && det) {
    for (long p : {3L, 5L, 7L, 11L, 13L}) {
      Int const  colorings = invariants::fox_colorings(*diagram, p);
      bool const divides   = *det % p == 0;
      bool const ok        = (colorings > p) == divides;
      report.checks.push_back({"colorings_mod_" + std::to_string(p), ok,
                               describe(colorings) + (divides ? " (p | det)" : " (p does not divide det)")});
    }
  }
  if (thorough && r.lin) {
    auto const lin_poly = invariants::alexander_polynomial(twistspin::lin_group(*r.lin),
                                                           twistspin::lin_grading(*r.lin));
    std::optional<freegroup::LaurentPoly> other;
    if (diagram) {
      other = invariants::alexander_polynomial(invariants::wirtinger(*diagram));
    } else if (r.seifert) {
      other = invariants::alexander_polynomial(invariants::SeifertMatrix{*r.seifert});
    }
    if (other) {
      bool const ok = lin_poly.normalized() == other->normalized();
      report.checks.push_back({"lin_alexander", ok, ok ? "match" : "polynomials differ"});
    }
  }
  return report;
}

metabelian::KnotData knot_data(KnotRecord const& r) {
  metabelian::KnotData data;
  data.name = r.name;
  if (r.pd) {
    data.diagram = notation::parse_pd(*r.pd);
  }
  data.lin         = r.lin;
  data.determinant = check_record(r).determinant();
  return data;
}

}  // namespace btws::cli
