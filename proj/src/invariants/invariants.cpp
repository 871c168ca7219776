#include "btws/invariants.hpp"

#include "btws/error.hpp"

#include <numeric>
#include <stdexcept>

namespace btws::invariants {

using freegroup::GeneratorRole;
using freegroup::Word;

void SeifertMatrix::validate() const {
  if (!v.is_square() || v.rows() % 2 != 0) {
    throw std::invalid_argument("Seifert matrix must be square of even size");
  }
}

Presentation wirtinger(notation::Diagram const& d) {
  Presentation p;
  auto const   arcs = d.arc_count();
  for (std::size_t k = 1; k <= arcs; ++k) {
    p.add_generator("y" + std::to_string(k), GeneratorRole::Meridian);
  }
  p.meridian = 1;
  if (d.crossing_count() == 0) {
    return p;
  }
  auto const edge_arc = d.edge_arcs();
  auto gen = [&](int edge) { return edge_arc[static_cast<std::size_t>(edge - 1)] + 1; };
  for (auto const& x : d.crossings()) {
    int const o = gen(x.over_j);
    int const a = gen(x.under_in);
    int const b = gen(x.under_out);
    if (x.sign > 0) {
      p.relators.push_back(Word{o, a, -o, -b});
    } else {
      p.relators.push_back(Word{-o, a, o, -b});
    }
  }
  return p;
}

namespace {

  // Visits every k-subset of {0..n-1} in lexicographic order.
  template <typename F>
  void for_each_subset(std::size_t n, std::size_t k, F&& f) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
      f(idx);
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) {
        --i;
      }
      if (i == 0) {
        return;
      }
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) {
        idx[j] = idx[j - 1] + 1;
      }
    }
  }

}  // namespace

LaurentPoly alexander_polynomial(Presentation const& p) {
  std::vector<long> grading(p.generator_count(), 1);
  return alexander_polynomial(p, grading);
}

LaurentPoly alexander_polynomial(Presentation const& p, std::span<long const> grading) {
  if (!p.meridian) {
    throw Error(ErrorKind::MeridianUnset, "Alexander polynomial needs a meridian column");
  }
  std::size_t const meridian = *p.meridian;
  std::vector<int>  columns;
  for (std::size_t g = 1; g <= p.generator_count(); ++g) {
    if (g != meridian) {
      columns.push_back(static_cast<int>(g));
    }
  }
  std::size_t const k = columns.size();
  std::size_t const r = p.relators.size();
  if (r < k) {
    throw Error(ErrorKind::DegenerateMatrix,
                "deficiency too large: " + std::to_string(r) + " relators for "
                    + std::to_string(k) + " non-meridian generators");
  }

  std::vector<std::vector<LaurentPoly>> fox(r, std::vector<LaurentPoly>(k));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      fox[i][j] = freegroup::fox_derivative(p.relators[i], columns[j], grading);
    }
  }

  LaurentPoly result;
  if (k == 0) {
    result = LaurentPoly(1);
  } else {
    for_each_subset(r, k, [&](std::vector<std::size_t> const& rows) {
      std::vector<std::vector<LaurentPoly>> minor;
      minor.reserve(k);
      for (auto i : rows) {
        minor.push_back(fox[i]);
      }
      result = freegroup::gcd(result, freegroup::determinant(std::move(minor)));
    });
  }
  if (result.is_zero()) {
    throw Error(ErrorKind::DegenerateMatrix, "all maximal minors vanish");
  }
  return result.normalized();
}

LaurentPoly alexander_polynomial(SeifertMatrix const& s) {
  s.validate();
  std::size_t const                     n = s.v.rows();
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = LaurentPoly(s.v(i, j)) - LaurentPoly::monomial(s.v(j, i), 1);
    }
  }
  auto delta = freegroup::determinant(std::move(m));
  if (delta.is_zero()) {
    throw Error(ErrorKind::DegenerateMatrix, "det(V - tV^T) vanishes");
  }
  return delta.normalized();
}

Int determinant_of_poly(LaurentPoly const& delta) { return abs(delta.evaluate(-1)); }

Int determinant_of_seifert(SeifertMatrix const& s) {
  s.validate();
  return abs(determinant(s.v + s.v.transpose()));
}

IntMatrix coloring_matrix(notation::Diagram const& d) {
  IntMatrix m(d.crossing_count(), d.arc_count());
  if (d.crossing_count() == 0) {
    return m;
  }
  auto const edge_arc = d.edge_arcs();
  auto arc = [&](int edge) { return static_cast<std::size_t>(edge_arc[edge - 1]); };
  for (std::size_t r = 0; r < d.crossing_count(); ++r) {
    auto const& x = d.crossings()[r];
    m(r, arc(x.over_j)) += 2;
    m(r, arc(x.under_in)) -= 1;
    m(r, arc(x.under_out)) -= 1;
  }
  return m;
}

Int fox_colorings(notation::Diagram const& d, long D) {
  if (D < 2) {
    throw std::invalid_argument("fox_colorings: modulus must be at least 2");
  }
  std::size_t const n = d.arc_count();
  // Brute force only while D^arcs stays at or below 10^7.
  double space = 1;
  for (std::size_t k = 0; k < n; ++k) {
    space *= static_cast<double>(D);
  }
  if (space > 1e7) {
    return fox_colorings_by_kernel(d, D);
  }

  struct Constraint {
    std::size_t over, in, out;
  };
  std::vector<Constraint> constraints;
  if (d.crossing_count() > 0) {
    auto const edge_arc = d.edge_arcs();
    for (auto const& x : d.crossings()) {
      constraints.push_back({static_cast<std::size_t>(edge_arc[x.over_j - 1]),
                             static_cast<std::size_t>(edge_arc[x.under_in - 1]),
                             static_cast<std::size_t>(edge_arc[x.under_out - 1])});
    }
  }

  std::vector<long> color(n, 0);
  Int               count = 0;
  while (true) {
    bool ok = true;
    for (auto const& c : constraints) {
      if ((2 * color[c.over] - color[c.in] - color[c.out]) % D != 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      ++count;
    }
    std::size_t k = 0;
    while (k < n && ++color[k] == D) {
      color[k++] = 0;
    }
    if (k == n) {
      break;
    }
  }
  return count;
}

Int fox_colorings_by_kernel(notation::Diagram const& d, long D) {
  return kernel_size_mod(coloring_matrix(d), Int(D));
}

Int resultant(LaurentPoly const& f, LaurentPoly const& g) {
  if (f.is_zero() || g.is_zero()) {
    return 0;
  }
  auto const a  = f.coefficients();  // low to high
  auto const b  = g.coefficients();
  auto const da = a.size() - 1;
  auto const db = b.size() - 1;
  IntMatrix  s(da + db, da + db);
  for (std::size_t r = 0; r < db; ++r) {
    for (std::size_t k = 0; k <= da; ++k) {
      s(r, r + k) = a[da - k];
    }
  }
  for (std::size_t r = 0; r < da; ++r) {
    for (std::size_t k = 0; k <= db; ++k) {
      s(db + r, r + k) = b[db - k];
    }
  }
  return determinant(std::move(s));
}

std::optional<Int> branched_cover_h1_order(LaurentPoly const& delta, long m) {
  if (m < 1) {
    throw std::invalid_argument("branched_cover_h1_order: m must be positive");
  }
  LaurentPoly cyclotomic_part;
  for (long k = 0; k < m; ++k) {
    cyclotomic_part.add_term(1, k);
  }
  Int const res = abs(resultant(delta.normalized(), cyclotomic_part));
  if (res == 0) {
    return std::nullopt;
  }
  return res;
}

}  // namespace btws::invariants
