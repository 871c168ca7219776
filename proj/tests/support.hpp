#pragma once

#include "btws/freegroup.hpp"
#include "btws/integer.hpp"
#include "btws/matrix.hpp"
#include "btws/metabelian.hpp"
#include "btws/notation.hpp"
#include "btws/twistspin.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace fixtures {

inline constexpr char const* kTrefoilPD = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
inline constexpr char const* kFigureEightPD = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
inline constexpr char const* kCinquefoilPD =
    "X(1,6,2,7) X(3,8,4,9) X(5,10,6,1) X(7,2,8,3) X(9,4,10,5)";
inline constexpr char const* kThreeTwistPD =
    "X(1,4,2,5) X(3,8,4,9) X(5,10,6,1) X(9,6,10,7) X(7,2,8,3)";

inline constexpr char const* kLinText = R"(
knot 3_1 1
alpha -1 2
alpha -2
beta -1
beta -2 1
end
knot 4_1 1
alpha 1 2
alpha -2
beta 1
beta -2 1
end
)";

inline btws::twistspin::LinPresentation lin(std::string const& name) {
  for (auto const& L : btws::twistspin::parse_lin_records(kLinText)) {
    if (L.name == name) {
      return L;
    }
  }
  throw std::logic_error("no fixture " + name);
}

}  // namespace fixtures

// Reference computations that share no code with the library routines they check.
namespace oracle {

using btws::Int;
using btws::IntMatrix;

// Laplace expansion along the first row.
inline Int cofactor_det(IntMatrix const& a) {
  std::size_t const n = a.rows();
  if (n == 0) {
    return 1;
  }
  if (n == 1) {
    return a(0, 0);
  }
  Int total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0) {
      continue;
    }
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c != j) {
          minor(r - 1, cc++) = a(r, c);
        }
      }
    }
    Int const term = a(0, j) * cofactor_det(minor);
    total += j % 2 == 0 ? term : Int(-term);
  }
  return total;
}

// k-th determinantal divisor d_1 ... d_k = gcd of all k x k minors.
inline std::vector<Int> invariant_factors(IntMatrix const& a) {
  std::size_t const        kmax = std::min(a.rows(), a.cols());
  std::vector<Int>         divisors{1};
  auto                     subsets = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              pick(k);
    auto                                  rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
      if (depth == k) {
        out.push_back(pick);
        return;
      }
      for (std::size_t i = start; i < n; ++i) {
        pick[depth] = i;
        self(self, i + 1, depth + 1);
      }
    };
    rec(rec, 0, 0);
    return out;
  };
  for (std::size_t k = 1; k <= kmax; ++k) {
    Int g = 0;
    for (auto const& rs : subsets(a.rows(), k)) {
      for (auto const& cs : subsets(a.cols(), k)) {
        IntMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            m(i, j) = a(rs[i], cs[j]);
          }
        }
        g = btws::gcd(g, cofactor_det(m));
      }
    }
    divisors.push_back(g);
  }
  std::vector<Int> factors;
  for (std::size_t k = 1; k <= kmax; ++k) {
    factors.push_back(divisors[k - 1] == 0 ? Int(0) : Int(divisors[k] / divisors[k - 1]));
  }
  return factors;
}

// Colorings counted straight from the crossings.
inline long colorings(btws::notation::Diagram const& d, long D) {
  auto const  arcs = d.edge_arcs();
  std::size_t n    = d.arc_count();
  std::vector<long> color(n, 0);
  long              count = 0;
  while (true) {
    bool ok = true;
    for (auto const& x : d.crossings()) {
      long const over = color[static_cast<std::size_t>(arcs[static_cast<std::size_t>(x.over_j - 1)])];
      long const a    = color[static_cast<std::size_t>(arcs[static_cast<std::size_t>(x.under_in - 1)])];
      long const b    = color[static_cast<std::size_t>(arcs[static_cast<std::size_t>(x.under_out - 1)])];
      if (((2 * over - a - b) % D + D) % D != 0) {
        ok = false;
        break;
      }
    }
    count += ok;
    std::size_t i = 0;
    while (i < n && ++color[i] == D) {
      color[i++] = 0;
    }
    if (i == n) {
      return count;
    }
  }
}

// |prod_{k=1}^{m-1} delta(exp(2 pi i k / m))|, rounded; nullopt when ~0.
inline std::optional<long> cover_order(std::vector<long> const& coefficients, long m) {
  double const pi = std::acos(-1.0);
  std::complex<double> product = 1;
  for (long k = 1; k < m; ++k) {
    std::complex<double> const z = std::polar(1.0, 2 * pi * static_cast<double>(k) / static_cast<double>(m));
    std::complex<double>       v = 0;
    std::complex<double>       p = 1;
    for (long c : coefficients) {
      v += static_cast<double>(c) * p;
      p *= z;
    }
    product *= v;
  }
  double const magnitude = std::abs(product);
  if (magnitude < 0.5) {
    return std::nullopt;
  }
  return std::lround(magnitude);
}

// Number of c in (Z/D)^k with M c == 0 (mod D), by direct scan.
inline long kernel_count(IntMatrix const& M, long D) {
  std::size_t const k = M.cols();
  std::vector<long> c(k, 0);
  long              count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < M.rows() && ok; ++i) {
      Int s = 0;
      for (std::size_t j = 0; j < k; ++j) {
        s += M(i, j) * c[j];
      }
      ok = s % D == 0;
    }
    count += ok;
    std::size_t i = 0;
    while (i < k && ++c[i] == D) {
      c[i++] = 0;
    }
    if (i == k) {
      return count;
    }
  }
}

using Mat2 = std::array<std::complex<double>, 4>;

inline Mat2 mul(Mat2 const& x, Mat2 const& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

// The explicit SL(2,C) matrix of a binary dihedral element.
inline Mat2 matrix(btws::metabelian::DihedralElement const& g) {
  double const               pi = std::acos(-1.0);
  std::complex<double> const z  = std::polar(1.0, pi * static_cast<double>(g.exponent()) / static_cast<double>(g.D()));
  if (g.is_reflection()) {
    return {0, -1.0 / z, z, 0};
  }
  return {z, 0, 0, 1.0 / z};
}

inline bool close(Mat2 const& x, Mat2 const& y) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(x[i] - y[i]) > 1e-9) {
      return false;
    }
  }
  return true;
}

// Relators evaluated as complex matrices; true when every one is the identity.
inline bool relators_hold(btws::freegroup::Presentation const& P,
                          btws::metabelian::Representation const& rho) {
  Mat2 const id{1, 0, 0, 1};
  for (auto const& r : P.relators) {
    Mat2 acc = id;
    for (int letter : r.letters()) {
      auto const& g = rho[static_cast<std::size_t>(std::abs(letter) - 1)];
      acc           = mul(acc, matrix(letter > 0 ? g : g.inverse()));
    }
    if (!close(acc, id)) {
      return false;
    }
  }
  return true;
}

}  // namespace oracle

namespace gen {

inline btws::freegroup::Word word(std::mt19937& rng, int generators, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> length(0, max_length);
  std::uniform_int_distribution<int>         letter(1, generators);
  std::bernoulli_distribution                flip(0.5);
  std::vector<int>                           letters(length(rng));
  for (int& l : letters) {
    l = letter(rng) * (flip(rng) ? -1 : 1);
  }
  return btws::freegroup::Word(letters);
}

inline btws::IntMatrix matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  btws::IntMatrix                     m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m(i, j) = entry(rng);
    }
  }
  return m;
}

}  // namespace gen
