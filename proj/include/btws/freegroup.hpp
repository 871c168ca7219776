#pragma once

#include "btws/laurent.hpp"
#include "btws/matrix.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace btws::freegroup {

// Element of a free group. Letter i > 0 is generator i, -i its inverse.
// Always stored freely reduced.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(std::vector<int> letters);

  std::vector<int> const& letters() const noexcept { return _letters; }
  std::size_t             size() const noexcept { return _letters.size(); }
  bool                    empty() const noexcept { return _letters.empty(); }

  Word inverse() const;
  Word power(long k) const;
  // Replaces generator g by images[g - 1]; every generator must be mapped.
  Word substitute(std::vector<Word> const& images) const;
  // Exponent sum of generator g.
  long exponent_sum(int g) const;
  int  max_generator() const;

  Word& operator*=(Word const& other);

  bool operator==(Word const&) const  = default;
  auto operator<=>(Word const&) const = default;

 private:
  std::vector<int> _letters;
};

Word operator*(Word a, Word const& b);
Word commutator(Word const& a, Word const& b);  // a b a^-1 b^-1
Word generator(int g);

std::vector<int> free_reduce(std::vector<int> letters);
inline Word      free_reduce(Word const& w) { return w; }

// What a generator stands for. Representation searches use this to restrict
// meridians to reflection-type and Seifert-surface loops to diagonal images.
enum class GeneratorRole {
  Meridian,  // meridian of the (1- or 2-)knot in question
  Surface,   // loop on a Seifert surface (a commutator)
  Other,
};

struct GeneratorInfo {
  std::string   name;
  GeneratorRole role    = GeneratorRole::Other;
  int           surface = 0;  // i of tau^j x~_i, 1-based; 0 if not a surface loop
  int           level   = 0;  // j of tau^j x~_i

  bool operator==(GeneratorInfo const&) const = default;
};

struct Presentation {
  std::vector<GeneratorInfo> generators;
  std::vector<Word>          relators;
  // 1-based index of a distinguished meridian generator, if any.
  std::optional<std::size_t> meridian;

  std::size_t generator_count() const noexcept { return generators.size(); }
  std::size_t add_generator(std::string name, GeneratorRole role = GeneratorRole::Other,
                            int surface = 0, int level = 0);
  // Throws std::invalid_argument if a relator or the meridian references a
  // missing generator.
  void validate() const;
};

// M[i][j] = exponent sum of generator j+1 in relator i.
IntMatrix abelianization_matrix(Presentation const& p);

// Grading: generator g (1-based) maps to t^grading[g-1].
using GroupRingElem = LaurentPoly;

GroupRingElem fox_derivative(Word const& w, int gen, std::span<long const> grading);
// Image of w itself under the grading, t^(sum of graded exponents).
GroupRingElem grade(Word const& w, std::span<long const> grading);

// Cosmetic cleanup: repeatedly kills generators that occur as a one-letter
// relator, then drops trivial and duplicate relators. Preserves the group.
Presentation simplify(Presentation p);

std::string to_string(Word const& w, Presentation const& p);

}  // namespace btws::freegroup
