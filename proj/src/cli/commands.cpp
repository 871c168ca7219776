#include "btws/cli.hpp"
#include "btws/error.hpp"
#include "btws/invariants.hpp"
#include "btws/notation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace btws::cli {

namespace {

  using Json = nlohmann::ordered_json;

  constexpr int kOk       = 0;
  constexpr int kInput    = 2;
  constexpr int kMismatch = 3;

  Json number(Int const& v) {
    static Int const safe = Int(1) << 53;
    if (btws::abs(v) <= safe) {
      return static_cast<long long>(v);
    }
    return btws::to_string(v);
  }

  Json optional_number(std::optional<Int> const& v) { return v ? number(*v) : Json(nullptr); }

  Json coefficients(freegroup::LaurentPoly const& p) {
    Json out = Json::array();
    for (auto const& c : p.normalized().coefficients()) {
      out.push_back(number(c));
    }
    return out;
  }

  void emit(std::ostream& out, Json const& j) { out << j.dump(2) << '\n'; }

  int exit_code(ErrorKind kind) {
    switch (kind) {
      case ErrorKind::DeterminantMismatch: return kMismatch;
      default: return kInput;
    }
  }

  std::string read_text(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorKind::Io, "cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  struct Context {
    std::string table_path;

    KnotTable table() const {
      return load_table(table_path.empty() ? default_table_path() : std::filesystem::path(table_path));
    }

    KnotRecord knot(std::string const& name) const {
      auto const t = table();
      auto const r = t.find(name);
      if (r == nullptr) {
        throw Error(ErrorKind::UnknownKnot, "no knot named '" + name + "' in " + t.source.string());
      }
      return *r;
    }
  };

  Json presentation_json(freegroup::Presentation const& P) {
    Json gens = Json::array();
    for (auto const& g : P.generators) {
      gens.push_back(g.name);
    }
    Json rels = Json::array();
    for (auto const& r : P.relators) {
      rels.push_back(r.letters());
    }
    Json snf = Json::array();
    for (auto const& d : invariants::abelianization_invariants(P)) {
      snf.push_back(number(d));
    }
    Json j;
    j["generators"]    = std::move(gens);
    j["relators"]      = std::move(rels);
    j["abelianization"] = std::move(snf);
    return j;
  }

  // det ---------------------------------------------------------------------

  struct DetArgs {
    std::optional<std::string> pd, knot, seifert;
  };

  int cmd_det(Context const& ctx, DetArgs const& a, std::ostream& out) {
    Json                                  j;
    std::optional<Int>                    fox, seifert, expected;
    std::optional<freegroup::LaurentPoly> poly;
    if (a.knot) {
      auto const r = ctx.knot(*a.knot);
      j["name"]    = r.name;
      if (r.pd) {
        poly = invariants::alexander_polynomial(invariants::wirtinger(notation::parse_pd(*r.pd)));
        fox  = invariants::determinant_of_poly(*poly);
      }
      if (r.seifert) {
        invariants::SeifertMatrix const s{*r.seifert};
        seifert = invariants::determinant_of_seifert(s);
        if (!poly) {
          poly = invariants::alexander_polynomial(s);
        }
      }
      expected = r.det_expected;
    } else if (a.pd) {
      j["name"] = nullptr;
      poly      = invariants::alexander_polynomial(invariants::wirtinger(notation::parse_pd(*a.pd)));
      fox       = invariants::determinant_of_poly(*poly);
    } else {
      invariants::SeifertMatrix const s{parse_matrix(read_text(*a.seifert))};
      try {
        s.validate();
      } catch (std::invalid_argument const& e) {
        throw Error(ErrorKind::MalformedToken, e.what());
      }
      j["name"] = std::filesystem::path(*a.seifert).stem().string();
      poly      = invariants::alexander_polynomial(s);
      seifert   = invariants::determinant_of_seifert(s);
    }
    auto const det = fox ? fox : seifert;
    j["alexander"] = coefficients(*poly);
    j["determinant"] = optional_number(det);
    j["routes"]      = {{"fox", optional_number(fox)}, {"seifert", optional_number(seifert)}};
    bool agree = !(fox && seifert && *fox != *seifert);
    if (expected) {
      j["expected"] = number(*expected);
      agree         = agree && *expected == *det;
    }
    j["agree"] = agree;
    emit(out, j);
    return agree ? kOk : kMismatch;
  }

  // count -------------------------------------------------------------------

  struct CountArgs {
    std::string knot;
    long        m       = 0;
    long        n       = 1;
    std::string method  = "all";
    unsigned    workers = 1;
  };

  int cmd_count(Context const& ctx, CountArgs const& a, std::ostream& out) {
    auto const p    = twistspin::make_params(a.m, a.n);
    auto const r    = ctx.knot(a.knot);
    auto const data = knot_data(r);

    std::vector<metabelian::Method> methods;
    bool const                      all = a.method == "all";
    if (all) {
      methods = {metabelian::Method::Formula, metabelian::Method::Characters,
                 metabelian::Method::Brute};
    } else if (auto m = metabelian::parse_method(a.method)) {
      methods = {*m};
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown method '" + a.method + "'");
    }

    metabelian::BruteForceOptions options;
    options.workers = std::max(1u, a.workers);

    Json                      per_method = Json::object();
    Json                      characters = Json::array();
    std::vector<std::string>  notes;
    std::optional<Int>        count;
    bool                      agree = true;
    for (auto const m : methods) {
      metabelian::CountReport report;
      try {
        report = metabelian::count_representations(data, p, m, options);
      } catch (Error const& e) {
        bool const skippable = e.kind() == ErrorKind::MissingLinData ||
                               e.kind() == ErrorKind::SearchSpaceTooLarge ||
                               e.kind() == ErrorKind::InvalidArgument;
        if (!all || !skippable) {
          throw;
        }
        notes.push_back(metabelian::to_string(m) + ": skipped (" + std::string(to_string(e.kind())) +
                        ")");
        continue;
      }
      per_method[metabelian::to_string(m)] = number(report.count);
      for (auto const& c : report.characters) {
        characters.push_back(c);
      }
      for (auto& note : report.notes) {
        std::string tagged = metabelian::to_string(m) + ": " + note;
        if (note.rfind("m=0", 0) == 0) {
          tagged = note;
        }
        if (std::find(notes.begin(), notes.end(), tagged) == notes.end()) {
          notes.push_back(std::move(tagged));
        }
      }
      if (count && *count != report.count) {
        agree = false;
      }
      if (!count) {
        count = report.count;
      }
    }

    Json j;
    j["knot"]       = r.name;
    j["m"]          = a.m;
    j["n"]          = a.n;
    j["beta"]       = p.beta;
    j["epsilon"]    = p.epsilon;
    j["count"]      = optional_number(count);
    j["per_method"] = std::move(per_method);
    j["agree"]      = agree;
    j["characters"] = std::move(characters);
    j["notes"]      = notes;
    emit(out, j);
    return agree ? kOk : kMismatch;
  }

  // present -----------------------------------------------------------------

  struct PresentArgs {
    std::string         knot;
    std::optional<long> m;
    long                n    = 1;
    std::string         form = "r1";
    bool                text = false;
  };

  int cmd_present(Context const& ctx, PresentArgs const& a, std::ostream& out) {
    auto const r = ctx.knot(a.knot);
    auto const need_lin = [&] {
      if (!r.lin) {
        throw Error(ErrorKind::MissingLinData, "knot " + r.name + " has no Lin data");
      }
      return *r.lin;
    };
    auto const need_m = [&] {
      if (!a.m) {
        throw Error(ErrorKind::InvalidArgument, "form " + a.form + " needs -m");
      }
      return twistspin::make_params(*a.m, a.n);
    };

    freegroup::Presentation P;
    if (a.form == "r1") {
      auto const p = need_m();
      freegroup::Presentation K;
      if (r.pd) {
        K = invariants::wirtinger(notation::parse_pd(*r.pd));
      } else if (r.lin) {
        K = twistspin::lin_group(*r.lin);
      } else {
        throw Error(ErrorKind::MissingLinData, "knot " + r.name + " has no knot-group presentation");
      }
      P = twistspin::btws_presentation(K, p);
    } else if (a.form == "cover") {
      auto const L = need_lin();
      auto const p = need_m();
      P            = twistspin::branched_cover_presentation(L, twistspin::positive_params(p).m);
    } else if (a.form == "plotnick") {
      auto const L = need_lin();
      P            = twistspin::plotnick_presentation(L, twistspin::positive_params(need_m()));
    } else if (a.form == "reduced") {
      P = twistspin::reduced_presentation(need_lin());
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown form '" + a.form + "'");
    }

    if (a.text) {
      out << '<';
      for (std::size_t i = 0; i < P.generators.size(); ++i) {
        out << (i ? ", " : " ") << P.generators[i].name;
      }
      out << " |";
      for (std::size_t i = 0; i < P.relators.size(); ++i) {
        out << (i ? ", " : " ") << freegroup::to_string(P.relators[i], P);
      }
      out << " >\n";
      return kOk;
    }
    Json j;
    j["knot"] = r.name;
    j["form"] = a.form;
    j["m"]    = a.m ? Json(*a.m) : Json(nullptr);
    j["n"]    = a.n;
    j.update(presentation_json(P));
    emit(out, j);
    return kOk;
  }

  // distinguish -------------------------------------------------------------

  struct Triple {
    std::string knot;
    long        m = 0;
    long        n = 1;
  };

  Triple parse_triple(std::string const& text) {
    std::vector<std::string> parts;
    std::stringstream        ss(text);
    std::string              part;
    while (std::getline(ss, part, ',')) {
      parts.push_back(part);
    }
    if (parts.size() != 3 || parts[0].empty()) {
      throw Error(ErrorKind::InvalidArgument, "expected KNOT,M,N, got '" + text + "'");
    }
    Triple t;
    t.knot = parts[0];
    try {
      std::size_t used_m = 0, used_n = 0;
      t.m = std::stol(parts[1], &used_m);
      t.n = std::stol(parts[2], &used_n);
      if (used_m != parts[1].size() || used_n != parts[2].size()) {
        throw std::invalid_argument("trailing characters");
      }
    } catch (std::exception const&) {
      throw Error(ErrorKind::InvalidArgument, "expected KNOT,M,N, got '" + text + "'");
    }
    (void)twistspin::make_params(t.m, t.n);
    return t;
  }

  int cmd_distinguish(Context const& ctx, std::string const& a_text, std::string const& b_text,
                      std::ostream& out) {
    auto const a  = parse_triple(a_text);
    auto const b  = parse_triple(b_text);
    auto const da = check_record(ctx.knot(a.knot)).determinant();
    auto const db = check_record(ctx.knot(b.knot)).determinant();
    auto const v  = metabelian::distinguish({*da, a.m}, {*db, b.m});
    Json       j;
    j["verdict"] = v.inequivalent ? "inequivalent" : "inconclusive";
    j["rule"]    = v.rule ? Json(*v.rule) : Json(nullptr);
    j["det_a"]   = number(*da);
    j["det_b"]   = number(*db);
    emit(out, j);
    return kOk;
  }

  // table -------------------------------------------------------------------

  int cmd_table(Context const& ctx, std::optional<std::string> const& file, bool verify,
                std::ostream& out) {
    Context local = ctx;
    if (file) {
      local.table_path = *file;
    }
    auto const t     = local.table();
    Json       knots = Json::array();
    bool       ok    = true;
    for (auto const& r : t.records) {
      auto const report = check_record(r, verify);
      Json       checks = Json::array();
      for (auto const& c : report.checks) {
        checks.push_back({{"check", c.name}, {"ok", c.ok}, {"detail", c.detail}});
      }
      ok = ok && report.ok();
      knots.push_back({{"name", r.name},
                       {"determinant", optional_number(report.determinant())},
                       {"has_pd", r.pd.has_value()},
                       {"has_seifert", r.seifert.has_value()},
                       {"has_lin", r.lin.has_value()},
                       {"ok", report.ok()},
                       {"checks", std::move(checks)}});
    }
    Json j;
    j["file"]  = t.source.string();
    j["count"] = t.records.size();
    j["ok"]    = ok;
    j["knots"] = std::move(knots);
    emit(out, j);
    return ok ? kOk : kMismatch;
  }

}  // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metabelian representation counts for branched twist spins", "twistspin"};
  app.require_subcommand(1);
  Context ctx;
  app.add_option("--table", ctx.table_path, "Knot table CSV (default: $TWISTSPIN_TABLE or bundled)");
  app.add_flag("--json", "JSON output (default)");

  DetArgs det;
  auto*   det_cmd = app.add_subcommand("det", "Alexander polynomial and determinant");
  auto*   o_pd    = det_cmd->add_option("--pd", det.pd, "PD code");
  auto*   o_knot  = det_cmd->add_option("--knot", det.knot, "Knot from the table");
  auto*   o_seif  = det_cmd->add_option("--seifert", det.seifert, "File holding a Seifert matrix");
  o_pd->excludes(o_knot)->excludes(o_seif);
  o_knot->excludes(o_seif);

  CountArgs count;
  auto*     count_cmd = app.add_subcommand("count", "Count irreducible metabelian representations");
  count_cmd->add_option("--knot", count.knot)->required();
  count_cmd->add_option("-m", count.m)->required();
  count_cmd->add_option("-n", count.n);
  count_cmd->add_option("--method", count.method)
      ->check(CLI::IsMember({"formula", "characters", "brute", "all"}));
  count_cmd->add_option("--workers", count.workers, "Brute-force partitions")
      ->check(CLI::Range(1u, 256u));

  PresentArgs present;
  auto*       present_cmd = app.add_subcommand("present", "Print a group presentation");
  present_cmd->add_option("--knot", present.knot)->required();
  present_cmd->add_option("-m", present.m);
  present_cmd->add_option("-n", present.n);
  present_cmd->add_option("--form", present.form)
      ->check(CLI::IsMember({"r1", "cover", "plotnick", "reduced"}));
  present_cmd->add_flag("--text", present.text, "Human-readable output");

  std::string a_triple, b_triple;
  auto*       dist_cmd = app.add_subcommand("distinguish", "Inequivalence test for two twist spins");
  dist_cmd->add_option("--a", a_triple, "KNOT,M,N")->required();
  dist_cmd->add_option("--b", b_triple, "KNOT,M,N")->required();

  std::optional<std::string> table_file;
  bool                       verify    = false;
  auto*                      table_cmd = app.add_subcommand("table", "Load and check a knot table");
  table_cmd->add_option("--file", table_file);
  table_cmd->add_flag("--verify", verify, "Also run coloring and polynomial cross-checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kOk;
  } catch (CLI::ParseError const& e) {
    err << "twistspin: " << e.what() << '\n';
    return kInput;
  }

  try {
    if (det_cmd->parsed()) {
      if (!det.pd && !det.knot && !det.seifert) {
        throw Error(ErrorKind::InvalidArgument, "det needs one of --pd, --knot, --seifert");
      }
      return cmd_det(ctx, det, out);
    }
    if (count_cmd->parsed()) {
      return cmd_count(ctx, count, out);
    }
    if (present_cmd->parsed()) {
      return cmd_present(ctx, present, out);
    }
    if (dist_cmd->parsed()) {
      return cmd_distinguish(ctx, a_triple, b_triple, out);
    }
    return cmd_table(ctx, table_file, verify, out);
  } catch (Error const& e) {
    err << "twistspin: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (std::invalid_argument const& e) {
    err << "twistspin: " << e.what() << '\n';
    return kInput;
  }
}

}  // namespace btws::cli
