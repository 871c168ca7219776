#include "btws/invariants.hpp"

#include <algorithm>

namespace btws::invariants {

namespace {

  // Position of the nonzero entry of least magnitude in a[t.., t..].
  bool find_pivot(IntMatrix const& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int  best;
    for (std::size_t i = t; i < a.rows(); ++i) {
      for (std::size_t j = t; j < a.cols(); ++j) {
        if (a(i, j) == 0) {
          continue;
        }
        Int mag = abs(a(i, j));
        if (!found || mag < best) {
          found = true;
          best  = std::move(mag);
          pi    = i;
          pj    = j;
        }
      }
    }
    return found;
  }

}  // namespace

SNFResult smith_normal_form(IntMatrix const& input) {
  IntMatrix         a = input;
  IntMatrix         L = IntMatrix::identity(a.rows());
  IntMatrix         R = IntMatrix::identity(a.cols());
  std::size_t const k = std::min(a.rows(), a.cols());

  auto row_op = [&](std::size_t dst, std::size_t src, Int const& f) {
    a.add_row_multiple(dst, src, f);
    L.add_row_multiple(dst, src, f);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, Int const& f) {
    a.add_col_multiple(dst, src, f);
    R.add_col_multiple(dst, src, f);
  };

  for (std::size_t t = 0; t < k; ++t) {
    while (true) {
      std::size_t pi = 0;
      std::size_t pj = 0;
      if (!find_pivot(a, t, pi, pj)) {
        break;
      }
      a.swap_rows(t, pi);
      L.swap_rows(t, pi);
      a.swap_cols(t, pj);
      R.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) != 0) {
          row_op(i, t, Int(-(a(i, t) / a(t, t))));
          clean = clean && a(i, t) == 0;
        }
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) != 0) {
          col_op(j, t, Int(-(a(t, j) / a(t, t))));
          clean = clean && a(t, j) == 0;
        }
      }
      if (!clean) {
        continue;  // a smaller remainder is now available as pivot
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < a.rows() && divides; ++i) {
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (a(i, j) % a(t, t) != 0) {
            row_op(t, i, Int(1));
            divides = false;
            break;
          }
        }
      }
      if (divides) {
        break;
      }
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      L.negate_row(t);
    }
  }

  SNFResult result;
  result.diagonal.reserve(k);
  for (std::size_t t = 0; t < k; ++t) {
    result.diagonal.push_back(a(t, t));
  }
  result.left  = std::move(L);
  result.right = std::move(R);
  return result;
}

Int kernel_size_mod(IntMatrix const& a, Int const& D) {
  auto const snf   = smith_normal_form(a);
  Int        count = 1;
  for (auto const& d : snf.diagonal) {
    count *= btws::gcd(d, D);
  }
  for (std::size_t j = snf.diagonal.size(); j < a.cols(); ++j) {
    count *= D;
  }
  return count;
}

std::vector<Int> abelianization_invariants(Presentation const& p) {
  auto const       snf = smith_normal_form(freegroup::abelianization_matrix(p));
  std::vector<Int> out = snf.diagonal;
  out.resize(p.generator_count(), Int(0));
  return out;
}

std::optional<Int> abelianization_order(Presentation const& p) {
  Int order = 1;
  for (auto const& d : abelianization_invariants(p)) {
    if (d == 0) {
      return std::nullopt;
    }
    order *= d;
  }
  return order;
}

}  // namespace btws::invariants
