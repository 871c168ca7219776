#include "btws/error.hpp"
#include "btws/invariants.hpp"
#include "btws/metabelian.hpp"

namespace btws::metabelian {

namespace {

  Int knot_determinant(KnotData const& knot) {
    if (knot.determinant) {
      return btws::abs(*knot.determinant);
    }
    if (knot.lin) {
      return btws::abs(determinant(character_condition_matrix(*knot.lin)));
    }
    if (knot.diagram) {
      auto const K = invariants::wirtinger(*knot.diagram);
      return invariants::determinant_of_poly(invariants::alexander_polynomial(K));
    }
    throw Error(ErrorKind::InvalidArgument, "knot " + knot.name + " carries no data");
  }

  long small_modulus(Int const& D) {
    if (!fits_int64(D)) {
      throw Error(ErrorKind::SearchSpaceTooLarge, "determinant too large for enumeration");
    }
    return static_cast<long>(D);
  }

  void expect(Verdict const& v, char const* form) {
    if (v.kind != Verdict::Kind::ValidIrreducible) {
      throw Error(ErrorKind::IncompatiblePresentation,
                  std::string("constructed representation fails on the ") + form +
                      " presentation");
    }
  }

  CountReport by_characters(KnotData const& knot, TwistSpinParams const& p) {
    if (!knot.lin) {
      throw Error(ErrorKind::MissingLinData, "knot " + knot.name + " has no Lin data");
    }
    IntMatrix const M = character_condition_matrix(*knot.lin);
    Int const       D = btws::abs(determinant(M));
    if (knot.determinant && btws::abs(*knot.determinant) != D) {
      throw Error(ErrorKind::DeterminantMismatch,
                  "Lin data of " + knot.name + " has |det(A+B)| = " + btws::to_string(D));
    }
    CountReport report;
    auto const  classes = enumerate_characters(M, small_modulus(D));
    auto const  reduced = twistspin::reduced_presentation(*knot.lin);
    if (p.m == 0) {
      report.notes.emplace_back("m=0: formula extended");
      for (auto const& cls : classes) {
        ExtendedCharacter const ec{cls.representative, 1, {cls.representative.c}};
        expect(verify_representation(reduced, build_representation(ec, reduced)), "reduced");
        report.characters.push_back(cls.representative.c);
      }
    } else {
      auto const pp       = twistspin::positive_params(p);
      auto const plotnick = twistspin::plotnick_presentation(*knot.lin, pp);
      std::size_t rejected = 0;
      for (auto const& cls : classes) {
        ExtendedCharacter ec;
        try {
          ec = extend_character(cls.representative, pp);
        } catch (Error const& e) {
          if (e.kind() != ErrorKind::InconsistentExtension) {
            throw;
          }
          ++rejected;
          continue;
        }
        expect(verify_representation(reduced, build_representation(ec, reduced)), "reduced");
        expect(verify_representation(plotnick, build_representation(ec, plotnick)), "fibred");
        report.characters.push_back(cls.representative.c);
      }
      if (rejected > 0) {
        report.notes.push_back(std::to_string(rejected) +
                               " character class(es) rejected: InconsistentExtension");
      }
    }
    report.count = static_cast<long>(report.characters.size());
    return report;
  }

  CountReport by_brute_force(KnotData const& knot, TwistSpinParams const& p,
                             BruteForceOptions const& options) {
    Presentation K;
    if (knot.diagram) {
      K = invariants::wirtinger(*knot.diagram);
    } else if (knot.lin) {
      K = twistspin::lin_group(*knot.lin);
    } else {
      throw Error(ErrorKind::InvalidArgument,
                  "knot " + knot.name + " has no presentation for a brute-force search");
    }
    CountReport report;
    Int const   D = knot_determinant(knot);
    report.count  = brute_force_count(twistspin::btws_presentation(K, p), small_modulus(D), options);
    return report;
  }

}  // namespace

std::string to_string(Method method) {
  switch (method) {
    case Method::Formula: return "formula";
    case Method::Characters: return "characters";
    case Method::Brute: return "brute";
  }
  return "?";
}

std::optional<Method> parse_method(std::string const& name) {
  for (Method m : {Method::Formula, Method::Characters, Method::Brute}) {
    if (to_string(m) == name) {
      return m;
    }
  }
  return std::nullopt;
}

CountReport count_representations(KnotData const& knot, TwistSpinParams const& p, Method method,
                                  BruteForceOptions const& options) {
  switch (method) {
    case Method::Formula: {
      CountReport report;
      report.count = count_by_formula(knot_determinant(knot), p.m);
      if (p.m == 0) {
        report.notes.emplace_back("m=0: formula extended");
      }
      return report;
    }
    case Method::Characters: return by_characters(knot, p);
    case Method::Brute: return by_brute_force(knot, p, options);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown counting method");
}

}  // namespace btws::metabelian
