#pragma once

#include "btws/freegroup.hpp"
#include "btws/matrix.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Group presentations attached to the (m, n)-branched twist spin of a 1-knot:
// the spin presentation built from any knot-group presentation, the cyclic
// branched cover built from Lin data, the fibred (eta, tau^j x~_i) form, and
// its reduction to the generators of level 0.

namespace btws::twistspin {

using freegroup::Presentation;
using freegroup::Word;

struct TwistSpinParams {
  long               m       = 0;
  long               n       = 1;
  int                epsilon = 1;
  long               beta    = 1;
  std::optional<long> q;  // inverse of n mod |m|; unset when m == 0

  bool operator==(TwistSpinParams const&) const = default;
};

// Requires n >= 1 and gcd(|m|, n) == 1. beta and q are the least nonnegative
// solutions of n*beta == epsilon and n*q == 1 (mod |m|); both are 0 when
// |m| == 1, and beta = 1 when m == 0.
TwistSpinParams make_params(long m, long n);

// Knot group <x_1..x_2g, mu | mu alpha_i mu^-1 = beta_i> from a free Seifert
// surface; only the alpha and beta words are stored, mu is implicit.
struct LinPresentation {
  std::string       name;
  int               genus = 0;
  std::vector<Word> alpha;
  std::vector<Word> beta;

  int surface_count() const noexcept { return 2 * genus; }
  // Throws std::invalid_argument on wrong word counts or foreign letters.
  void validate() const;
};

// A[i][j], B[i][j]: exponent sums of x_{j+1} in alpha_{i+1} and beta_{i+1}.
IntMatrix alpha_exponents(LinPresentation const& L);
IntMatrix beta_exponents(LinPresentation const& L);

// The knot group itself, generators x_1..x_2g then mu (the meridian).
Presentation lin_group(LinPresentation const& L);
// Grading x_i -> 0, mu -> 1 for lin_group.
std::vector<long> lin_grading(LinPresentation const& L);

// <y_1..y_s, h | r_1..r_t, [y_i, h], y_1^|m| h^beta> where y_1 is the
// meridian of K. The result records no meridian: the 2-knot meridian lives in
// the fibred form, not among the y_i.
Presentation btws_presentation(Presentation const& K, TwistSpinParams const& p);

// pi_1 of the m-fold cyclic branched cover: generators tau^j x~_i (named
// x<i>_<j>, ordered by level then index) and relators
// alpha~_i^(j) (beta~_i^(j-1))^-1 with levels mod m.
Presentation branched_cover_presentation(LinPresentation const& L, long m);

// Cover generators plus eta; adds eta tau^(j+n) x~_i eta^-1 (tau^j x~_i)^-1.
// Requires p.m >= 1.
Presentation plotnick_presentation(LinPresentation const& L, TwistSpinParams const& p);

// <tau^0 x~_1..tau^0 x~_2g, eta | eta alpha~_i^(0) eta^-1 (beta~_i^(0))^-1>.
Presentation reduced_presentation(LinPresentation const& L);

// Params for the fibred forms: (m, n) -> (|m|, n).
TwistSpinParams positive_params(TwistSpinParams const& p);

// Lin data text: records of the form
//
//   knot <name> <genus>
//   alpha <signed indices>     (2g lines)
//   beta <signed indices>      (2g lines)
//   end
//
// with '#' starting a comment.
std::vector<LinPresentation> parse_lin_records(std::string_view text);
std::string                  render_lin_record(LinPresentation const& L);

}  // namespace btws::twistspin
