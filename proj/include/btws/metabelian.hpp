#pragma once

#include "btws/freegroup.hpp"
#include "btws/integer.hpp"
#include "btws/matrix.hpp"
#include "btws/notation.hpp"
#include "btws/twistspin.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

// Irreducible metabelian SL(2,C) representations of branched twist spin
// groups. Every such representation is conjugate into the binary dihedral
// group generated by diag(z, 1/z) (z a 2D-th root of unity) and
// [[0,-1],[1,0]], so all arithmetic is exponent arithmetic in Z/2D.

namespace btws::metabelian {

using freegroup::Presentation;
using twistspin::LinPresentation;
using twistspin::TwistSpinParams;

// lambda_i = exp(2 pi sqrt(-1) c_i / D), stored as the exponents c_i mod D.
struct Character {
  long              D = 1;
  std::vector<long> c;

  bool      nontrivial() const;
  Character negated() const;

  bool operator==(Character const&) const  = default;
  auto operator<=>(Character const&) const = default;
};

// The pair {c, -c}; conjugation by [[0,-1],[1,0]] swaps the two.
struct RepClass {
  Character representative;  // lexicographically smaller of c, -c

  Character partner() const { return representative.negated(); }
  bool      operator==(RepClass const&) const = default;
};

RepClass make_rep_class(Character const& c);

// Element of the binary dihedral group of order 4D (D odd):
//   rotation(a)   = diag(z^a, z^-a)
//   reflection(a) = [[0, -z^-a], [z^a, 0]]
// with z = exp(pi sqrt(-1) / D) and a taken mod 2D.
class DihedralElement {
 public:
  DihedralElement() = default;

  static DihedralElement rotation(long D, long a);
  static DihedralElement reflection(long D, long a);
  static DihedralElement identity(long D) { return rotation(D, 0); }

  long D() const noexcept { return _D; }
  long exponent() const noexcept { return _a; }
  bool is_reflection() const noexcept { return _reflection; }
  bool is_central() const noexcept { return !_reflection && (_a == 0 || _a == _D); }

  DihedralElement inverse() const;

  friend DihedralElement operator*(DihedralElement const& x, DihedralElement const& y);
  bool operator==(DihedralElement const&) const = default;

 private:
  DihedralElement(long D, long a, bool reflection);

  long _D          = 1;
  long _a          = 0;
  bool _reflection = false;
};

// lambda^(j) for j = 0..m-1; levels[j][i] is the exponent of lambda_i^(j).
struct ExtendedCharacter {
  Character                      base;
  long                           m = 1;
  std::vector<std::vector<long>> levels;
};

// Images of the generators, indexed like Presentation::generators.
using Representation = std::vector<DihedralElement>;

struct Verdict {
  enum class Kind { ValidIrreducible, ValidReducible, Invalid };
  Kind                       kind = Kind::Invalid;
  std::optional<std::size_t> failed_relator;  // 0-based, set when Invalid

  bool valid() const noexcept { return kind != Kind::Invalid; }
  bool operator==(Verdict const&) const = default;
};

// (|det| - 1) / 2 for even m (m = 0 included), 0 for odd m. det must be odd.
Int count_by_formula(Int const& det, long m);

// A + B, the exponent matrices of the alpha and beta words. Conjugation by
// the anti-diagonal meridian image inverts diagonal matrices, so a diagonal
// assignment satisfies the Lin relators exactly when (A + B) c == 0.
IntMatrix character_condition_matrix(LinPresentation const& L);

enum class EnumerationMode { Smith, BruteForce };

// All nontrivial c in (Z/D)^k with M c == 0 (mod D), grouped into {c, -c}
// and sorted by representative. Requires |det M| == D with D odd.
std::vector<RepClass> enumerate_characters(IntMatrix const& M, long D,
                                           EnumerationMode mode = EnumerationMode::Smith);
// Every solution of M c == 0 (mod D), including the trivial one.
std::vector<Character> kernel_characters(IntMatrix const& M, long D, EnumerationMode mode);

// Propagates c through the levels with lambda^(j+1) = lambda^(j) (q even)
// or its inverse (q odd). Throws InconsistentExtension when the levels fail
// to close up after m steps or violate eta tau^(j+n) x eta^-1 = tau^j x.
ExtendedCharacter extend_character(Character const& c, TwistSpinParams const& p);

// tau^j x~_i -> rotation(2 lambda_i^(j)), meridian -> reflection(0).
Representation build_representation(ExtendedCharacter const& ec, Presentation const& P);

Verdict verify_representation(Presentation const& P, Representation const& rho);

struct BruteForceOptions {
  unsigned workers   = 1;
  bool     prune     = true;  // meridians -> reflections, surface loops -> rotations
  double   max_space = 1e8;
};

// Number of classes of valid irreducible assignments into the binary dihedral
// group of order 4D; assignments are identified when their rotation exponents
// and reflection offsets agree up to global negation.
Int brute_force_count(Presentation const& P, long D, BruteForceOptions const& options = {});

enum class Method { Formula, Characters, Brute };

std::string           to_string(Method method);
std::optional<Method> parse_method(std::string const& name);

struct KnotData {
  std::string                      name;
  std::optional<Int>               determinant;
  std::optional<LinPresentation>   lin;
  std::optional<notation::Diagram> diagram;
};

struct CountReport {
  Int                            count = 0;
  std::vector<std::vector<long>> characters;  // representatives, method = Characters
  std::vector<std::string>       notes;
};

CountReport count_representations(KnotData const& knot, TwistSpinParams const& p, Method method,
                                  BruteForceOptions const& options = {});

struct SpinSummary {
  Int  determinant;
  long m = 0;
};

struct Distinction {
  bool               inequivalent = false;
  std::optional<int> rule;  // 1 or 2 when inequivalent

  bool operator==(Distinction const&) const = default;
};

Distinction distinguish(SpinSummary const& a, SpinSummary const& b);

}  // namespace btws::metabelian
