#pragma once

#include "btws/freegroup.hpp"
#include "btws/integer.hpp"
#include "btws/matrix.hpp"
#include "btws/notation.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace btws::invariants {

using freegroup::LaurentPoly;
using freegroup::Presentation;

struct SeifertMatrix {
  IntMatrix v;  // 2g x 2g

  std::size_t genus() const noexcept { return v.rows() / 2; }
  // Throws std::invalid_argument unless v is square of even size.
  void validate() const;
};

// L * A * R == diag(d_1, ..., d_k) with d_1 | d_2 | ... and all d_i >= 0,
// k = min(rows, cols); L and R are unimodular.
struct SNFResult {
  std::vector<Int> diagonal;
  IntMatrix        left;
  IntMatrix        right;
};

SNFResult smith_normal_form(IntMatrix const& a);

// One generator per arc, one relator per crossing: positive crossings give
// o a o^-1 b^-1 and negative ones o^-1 a o b^-1, where o is the over arc and
// the under-strand passes from arc a to arc b. Generator 1 is the meridian.
Presentation wirtinger(notation::Diagram const& d);

// gcd of the maximal minors of the Alexander matrix with the meridian column
// removed, normalized (lowest exponent 0, positive leading coefficient).
LaurentPoly alexander_polynomial(Presentation const& p);
LaurentPoly alexander_polynomial(Presentation const& p, std::span<long const> grading);

// det(V - t V^T), normalized.
LaurentPoly alexander_polynomial(SeifertMatrix const& s);

Int determinant_of_poly(LaurentPoly const& delta);
Int determinant_of_seifert(SeifertMatrix const& s);

// Maps arcs -> Z/D satisfying 2*over == under_in + under_out (mod D).
Int fox_colorings(notation::Diagram const& d, long D);
// Same count through the Smith form of the colouring matrix.
Int fox_colorings_by_kernel(notation::Diagram const& d, long D);
IntMatrix coloring_matrix(notation::Diagram const& d);

// Number of x in (Z/D)^n with A x == 0 (mod D), from the Smith form of A.
Int kernel_size_mod(IntMatrix const& a, Int const& D);

// Order of H_1 of the m-fold cyclic branched cover, |Res(delta, 1 + t + ...
// + t^(m-1))| as an exact Sylvester determinant; nullopt means infinite.
std::optional<Int> branched_cover_h1_order(LaurentPoly const& delta, long m);
Int                resultant(LaurentPoly const& f, LaurentPoly const& g);

// Invariant factors of the abelianization, one per generator (zeros mark
// free summands).
std::vector<Int> abelianization_invariants(Presentation const& p);
// Order of the abelianization; nullopt when it is infinite.
std::optional<Int> abelianization_order(Presentation const& p);

}  // namespace btws::invariants
