#include "btws/error.hpp"
#include "btws/invariants.hpp"
#include "btws/metabelian.hpp"

#include <algorithm>
#include <set>

namespace btws::metabelian {

namespace {

  long wrap(long a, long modulus) {
    long const r = a % modulus;
    return r < 0 ? r + modulus : r;
  }

  long wrap(Int const& a, long modulus) {
    return static_cast<long>(btws::mod(a, Int(modulus)));
  }

  void check_modulus(IntMatrix const& M, long D) {
    if (D < 1) {
      throw Error(ErrorKind::InvalidArgument, "character modulus must be positive");
    }
    if (M.rows() != M.cols()) {
      throw Error(ErrorKind::DegenerateMatrix, "character condition matrix is not square");
    }
    Int const det = btws::abs(determinant(M));
    if (det != D) {
      throw Error(ErrorKind::DeterminantMismatch,
                  "|det M| = " + btws::to_string(det) + " but D = " + std::to_string(D));
    }
    if (D % 2 == 0) {
      throw Error(ErrorKind::EvenDeterminant, "character modulus must be odd");
    }
  }

  bool in_kernel(IntMatrix const& M, std::vector<long> const& c, long D) {
    for (std::size_t i = 0; i < M.rows(); ++i) {
      Int s = 0;
      for (std::size_t j = 0; j < M.cols(); ++j) {
        s += M(i, j) * c[j];
      }
      if (btws::mod(s, Int(D)) != 0) {
        return false;
      }
    }
    return true;
  }

  // Odometer over (Z/radix_0) x (Z/radix_1) x ...; returns false after the last vector.
  bool advance(std::vector<long>& v, std::vector<long> const& radix) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (++v[i] < radix[i]) {
        return true;
      }
      v[i] = 0;
    }
    return false;
  }

  std::vector<Character> scan_kernel(IntMatrix const& M, long D) {
    std::size_t const      k = M.cols();
    double                 space = 1;
    for (std::size_t i = 0; i < k; ++i) {
      space *= static_cast<double>(D);
    }
    if (space > 1e7) {
      throw Error(ErrorKind::SearchSpaceTooLarge,
                  "brute-force character scan limited to D^k <= 10^7");
    }
    std::vector<Character> out;
    std::vector<long>      c(k, 0);
    std::vector<long> const radix(k, D);
    do {
      if (in_kernel(M, c, D)) {
        out.push_back({D, c});
      }
    } while (advance(c, radix));
    return out;
  }

  // L M R = diag(d), so M c == 0 iff d_i y_i == 0 for c = R y.
  std::vector<Character> smith_kernel(IntMatrix const& M, long D) {
    auto const        snf = invariants::smith_normal_form(M);
    std::size_t const k   = M.cols();
    std::vector<long> step(k, 1);
    std::vector<long> radix(k, D);
    for (std::size_t i = 0; i < k; ++i) {
      Int const d = i < snf.diagonal.size() ? snf.diagonal[i] : Int(0);
      long const g = static_cast<long>(btws::gcd(d, Int(D)));
      radix[i]     = g;
      step[i]      = D / g;
    }
    std::set<Character> found;
    std::vector<long>   y(k, 0);
    do {
      std::vector<long> c(k, 0);
      for (std::size_t r = 0; r < k; ++r) {
        Int s = 0;
        for (std::size_t i = 0; i < k; ++i) {
          s += snf.right(r, i) * (y[i] * step[i]);
        }
        c[r] = wrap(s, D);
      }
      found.insert({D, std::move(c)});
    } while (advance(y, radix));
    return {found.begin(), found.end()};
  }

}  // namespace

bool Character::nontrivial() const {
  return std::any_of(c.begin(), c.end(), [](long x) { return x != 0; });
}

Character Character::negated() const {
  Character out{D, c};
  for (long& x : out.c) {
    x = wrap(-x, D);
  }
  return out;
}

RepClass make_rep_class(Character const& c) {
  Character const neg = c.negated();
  return {neg.c < c.c ? neg : c};
}

Int count_by_formula(Int const& det, long m) {
  Int const D = btws::abs(det);
  if (D % 2 == 0) {
    throw Error(ErrorKind::EvenDeterminant,
                "knot determinant " + btws::to_string(D) + " is even");
  }
  return m % 2 == 0 ? Int((D - 1) / 2) : Int(0);
}

IntMatrix character_condition_matrix(LinPresentation const& L) {
  return twistspin::alpha_exponents(L) + twistspin::beta_exponents(L);
}

std::vector<Character> kernel_characters(IntMatrix const& M, long D, EnumerationMode mode) {
  check_modulus(M, D);
  std::vector<Character> out = mode == EnumerationMode::Smith ? smith_kernel(M, D) : scan_kernel(M, D);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RepClass> enumerate_characters(IntMatrix const& M, long D, EnumerationMode mode) {
  std::set<Character> reps;
  for (auto const& c : kernel_characters(M, D, mode)) {
    if (c.nontrivial()) {
      reps.insert(make_rep_class(c).representative);
    }
  }
  std::vector<RepClass> out;
  out.reserve(reps.size());
  for (auto const& r : reps) {
    out.push_back({r});
  }
  return out;
}

ExtendedCharacter extend_character(Character const& c, TwistSpinParams const& p) {
  if (p.m < 1) {
    throw Error(ErrorKind::NonPositiveM, "extend_character needs m >= 1");
  }
  if (!p.q) {
    throw Error(ErrorKind::InvalidArgument, "twist spin parameters carry no q");
  }
  bool const flip = *p.q % 2 != 0;
  ExtendedCharacter ec{c, p.m, {}};
  ec.levels.push_back(c.c);
  for (long j = 1; j < p.m; ++j) {
    Character const prev{c.D, ec.levels.back()};
    ec.levels.push_back(flip ? prev.negated().c : prev.c);
  }
  Character const last{c.D, ec.levels.back()};
  if ((flip ? last.negated() : last) != c) {
    throw Error(ErrorKind::InconsistentExtension,
                "levels do not close up after " + std::to_string(p.m) + " steps");
  }
  for (long j = 0; j < p.m; ++j) {
    Character const shifted{c.D, ec.levels[static_cast<std::size_t>(wrap(j + p.n, p.m))]};
    if (shifted.negated().c != ec.levels[static_cast<std::size_t>(j)]) {
      throw Error(ErrorKind::InconsistentExtension,
                  "eta relation fails at level " + std::to_string(j));
    }
  }
  return ec;
}

Representation build_representation(ExtendedCharacter const& ec, Presentation const& P) {
  long const     D = ec.base.D;
  std::size_t const k = ec.base.c.size();
  Representation rho;
  rho.reserve(P.generator_count());
  for (auto const& g : P.generators) {
    switch (g.role) {
      case freegroup::GeneratorRole::Meridian:
        rho.push_back(DihedralElement::reflection(D, 0));
        break;
      case freegroup::GeneratorRole::Surface: {
        if (g.surface < 1 || static_cast<std::size_t>(g.surface) > k || g.level < 0 ||
            g.level >= static_cast<long>(ec.levels.size())) {
          throw Error(ErrorKind::IncompatiblePresentation,
                      "generator " + g.name + " lies outside the character data");
        }
        long const lambda = ec.levels[static_cast<std::size_t>(g.level)]
                                     [static_cast<std::size_t>(g.surface - 1)];
        rho.push_back(DihedralElement::rotation(D, 2 * lambda));
        break;
      }
      case freegroup::GeneratorRole::Other:
        throw Error(ErrorKind::IncompatiblePresentation,
                    "generator " + g.name + " is neither a surface loop nor a meridian");
    }
  }
  return rho;
}

Verdict verify_representation(Presentation const& P, Representation const& rho) {
  if (rho.size() != P.generator_count()) {
    throw Error(ErrorKind::IncompatiblePresentation,
                "representation does not assign every generator");
  }
  if (rho.empty()) {
    return {Verdict::Kind::ValidReducible, std::nullopt};
  }
  for (std::size_t r = 0; r < P.relators.size(); ++r) {
    DihedralElement acc = DihedralElement::identity(rho.front().D());
    for (int letter : P.relators[r].letters()) {
      auto const& x = rho[static_cast<std::size_t>(std::abs(letter) - 1)];
      acc           = acc * (letter > 0 ? x : x.inverse());
    }
    if (acc != DihedralElement::identity(acc.D())) {
      return {Verdict::Kind::Invalid, r};
    }
  }
  for (std::size_t i = 0; i < rho.size(); ++i) {
    for (std::size_t j = i + 1; j < rho.size(); ++j) {
      if (rho[i] * rho[j] != rho[j] * rho[i]) {
        return {Verdict::Kind::ValidIrreducible, std::nullopt};
      }
    }
  }
  return {Verdict::Kind::ValidReducible, std::nullopt};
}

Distinction distinguish(SpinSummary const& a, SpinSummary const& b) {
  Int const da = btws::abs(a.determinant);
  Int const db = btws::abs(b.determinant);
  if (da % 2 == 0 || db % 2 == 0) {
    throw Error(ErrorKind::EvenDeterminant, "knot determinants must be odd");
  }
  bool const ea = a.m % 2 == 0;
  bool const eb = b.m % 2 == 0;
  if (ea && eb && da != db) {
    return {true, 1};
  }
  if (ea != eb && (ea ? da : db) != 1) {
    return {true, 2};
  }
  return {false, std::nullopt};
}

}  // namespace btws::metabelian
