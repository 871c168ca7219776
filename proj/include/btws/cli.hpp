#pragma once

#include "btws/integer.hpp"
#include "btws/matrix.hpp"
#include "btws/metabelian.hpp"
#include "btws/twistspin.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace btws::cli {

struct KnotRecord {
  std::string                                name;
  std::optional<std::string>                 pd;
  std::optional<IntMatrix>                   seifert;
  std::optional<std::string>                 lin_ref;
  std::optional<twistspin::LinPresentation>  lin;  // resolved from lin_ref
  std::optional<Int>                         det_expected;
};

struct KnotTable {
  std::filesystem::path   source;
  std::vector<KnotRecord> records;

  KnotRecord const* find(std::string_view name) const;
};

// Rows separated by ';' (or newlines), entries by whitespace.
IntMatrix parse_matrix(std::string_view text);
std::string render_matrix(IntMatrix const& m);

// CSV with header name,pd,seifert,lin_ref,det. lin_ref is NAME or FILE#NAME,
// FILE relative to base_dir and defaulting to lin.txt. Throws MalformedTable.
KnotTable parse_table(std::string_view csv, std::filesystem::path const& base_dir);
KnotTable load_table(std::filesystem::path const& path);

// $TWISTSPIN_TABLE if set, else the bundled data/knots.csv.
std::filesystem::path default_table_path();

struct RecordCheck {
  std::string name;
  bool        ok = true;
  std::string detail;
};

struct RecordReport {
  std::string              knot;
  std::optional<Int>       fox;       // |Delta(-1)| from the PD code
  std::optional<Int>       seifert;   // |det(V + V^T)|
  std::optional<Int>       lin;       // |det(A + B)|
  std::vector<RecordCheck> checks;

  bool               ok() const;
  std::optional<Int> determinant() const;
};

// Determinant routes plus det_expected; `thorough` adds coloring checks and
// an Alexander polynomial comparison against the Lin data.
RecordReport check_record(KnotRecord const& r, bool thorough = false);

metabelian::KnotData knot_data(KnotRecord const& r);

// Exit codes: 0 success, 2 input error, 3 verification failure or disagreement.
int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace btws::cli
