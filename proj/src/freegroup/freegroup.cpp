#include "btws/freegroup.hpp"

#include "btws/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace btws::freegroup {

std::vector<int> free_reduce(std::vector<int> letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int letter : letters) {
    if (letter == 0) {
      throw std::invalid_argument("free_reduce: zero letter");
    }
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

Word::Word(std::initializer_list<int> letters)
    : _letters(free_reduce(std::vector<int>(letters))) {}

Word::Word(std::vector<int> letters) : _letters(free_reduce(std::move(letters))) {}

Word Word::inverse() const {
  std::vector<int> inv(_letters.rbegin(), _letters.rend());
  for (int& letter : inv) {
    letter = -letter;
  }
  Word w;
  w._letters = std::move(inv);
  return w;
}

Word Word::power(long k) const {
  Word const base = k < 0 ? inverse() : *this;
  Word       result;
  for (long i = 0; i < std::labs(k); ++i) {
    result *= base;
  }
  return result;
}

Word Word::substitute(std::vector<Word> const& images) const {
  Word result;
  for (int letter : _letters) {
    auto const g = static_cast<std::size_t>(std::abs(letter));
    if (g > images.size()) {
      throw std::out_of_range("Word::substitute: unmapped generator " + std::to_string(g));
    }
    result *= letter > 0 ? images[g - 1] : images[g - 1].inverse();
  }
  return result;
}

long Word::exponent_sum(int g) const {
  long sum = 0;
  for (int letter : _letters) {
    if (letter == g) {
      ++sum;
    } else if (letter == -g) {
      --sum;
    }
  }
  return sum;
}

int Word::max_generator() const {
  int m = 0;
  for (int letter : _letters) {
    m = std::max(m, std::abs(letter));
  }
  return m;
}

Word& Word::operator*=(Word const& other) {
  for (int letter : other._letters) {
    if (!_letters.empty() && _letters.back() == -letter) {
      _letters.pop_back();
    } else {
      _letters.push_back(letter);
    }
  }
  return *this;
}

Word operator*(Word a, Word const& b) { return a *= b; }

Word commutator(Word const& a, Word const& b) { return a * b * a.inverse() * b.inverse(); }

Word generator(int g) { return Word{g}; }

std::size_t Presentation::add_generator(std::string name, GeneratorRole role, int surface,
                                        int level) {
  generators.push_back(GeneratorInfo{std::move(name), role, surface, level});
  return generators.size();
}

void Presentation::validate() const {
  auto const n = static_cast<int>(generators.size());
  for (std::size_t r = 0; r < relators.size(); ++r) {
    if (relators[r].max_generator() > n) {
      throw std::invalid_argument("relator " + std::to_string(r + 1)
                                  + " references a missing generator");
    }
  }
  if (meridian && (*meridian == 0 || *meridian > generators.size())) {
    throw std::invalid_argument("meridian references a missing generator");
  }
}

IntMatrix abelianization_matrix(Presentation const& p) {
  IntMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    for (int letter : p.relators[r].letters()) {
      auto const g = static_cast<std::size_t>(std::abs(letter));
      if (g > p.generators.size()) {
        throw std::invalid_argument("abelianization_matrix: letter out of range");
      }
      m(r, g - 1) += letter > 0 ? 1 : -1;
    }
  }
  return m;
}

namespace {

  long grading_of(int letter, std::span<long const> grading) {
    auto const g = static_cast<std::size_t>(std::abs(letter));
    if (g == 0 || g > grading.size()) {
      throw Error(ErrorKind::UngradedGenerator, "generator " + std::to_string(g));
    }
    return grading[g - 1];
  }

}  // namespace

GroupRingElem fox_derivative(Word const& w, int gen, std::span<long const> grading) {
  GroupRingElem result;
  long          prefix = 0;  // grading of the prefix read so far
  for (int letter : w.letters()) {
    long const step = grading_of(letter, grading);
    if (letter == gen) {
      result.add_term(1, prefix);
      prefix += step;
    } else if (letter == -gen) {
      // d(g^-1)/dg = -g^-1
      prefix -= step;
      result.add_term(-1, prefix);
    } else {
      prefix += letter > 0 ? step : -step;
    }
  }
  return result;
}

GroupRingElem grade(Word const& w, std::span<long const> grading) {
  long e = 0;
  for (int letter : w.letters()) {
    long const step = grading_of(letter, grading);
    e += letter > 0 ? step : -step;
  }
  return LaurentPoly::monomial(1, e);
}

namespace {

  void kill_generator(Presentation& p, int g) {
    std::vector<Word> images;
    images.reserve(p.generators.size());
    for (int k = 1; k <= static_cast<int>(p.generators.size()); ++k) {
      images.push_back(k < g ? generator(k) : k == g ? Word{} : generator(k - 1));
    }
    for (auto& r : p.relators) {
      r = r.substitute(images);
    }
    p.generators.erase(p.generators.begin() + (g - 1));
    if (p.meridian) {
      auto const gi = static_cast<std::size_t>(g);
      if (*p.meridian == gi) {
        p.meridian.reset();
      } else if (*p.meridian > gi) {
        --*p.meridian;
      }
    }
  }

}  // namespace

Presentation simplify(Presentation p) {
  while (true) {
    auto it = std::find_if(p.relators.begin(), p.relators.end(),
                           [](Word const& w) { return w.size() == 1; });
    if (it == p.relators.end()) {
      break;
    }
    kill_generator(p, std::abs(it->letters().front()));
  }
  std::vector<Word> kept;
  std::set<Word>    seen;
  for (auto& r : p.relators) {
    if (r.empty() || seen.contains(r) || seen.contains(r.inverse())) {
      continue;
    }
    seen.insert(r);
    kept.push_back(std::move(r));
  }
  p.relators = std::move(kept);
  return p;
}

std::string to_string(Word const& w, Presentation const& p) {
  if (w.empty()) {
    return "1";
  }
  std::ostringstream out;
  bool               first = true;
  for (int letter : w.letters()) {
    auto const g = static_cast<std::size_t>(std::abs(letter));
    out << (first ? "" : " ") << p.generators.at(g - 1).name << (letter < 0 ? "^-1" : "");
    first = false;
  }
  return out.str();
}

}  // namespace btws::freegroup
