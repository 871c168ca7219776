#include "btws/twistspin.hpp"

#include "btws/error.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace btws::twistspin {

using freegroup::generator;
using freegroup::GeneratorRole;

namespace {

  long positive_mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
  }

  // Least nonnegative x with a*x == b (mod m); a invertible mod m, m >= 2.
  long solve_linear(long a, long b, long m) {
    for (long x = 0; x < m; ++x) {
      if (positive_mod(a * x - b, m) == 0) {
        return x;
      }
    }
    throw std::logic_error("solve_linear: no solution");
  }

}  // namespace

TwistSpinParams make_params(long m, long n) {
  if (n < 1) {
    throw Error(ErrorKind::InvalidArgument, "n must be positive, got " + std::to_string(n));
  }
  long const abs_m = std::labs(m);
  if (std::gcd(abs_m, n) != 1) {
    throw Error(ErrorKind::NotCoprime, "gcd(|m|, n) = gcd(" + std::to_string(abs_m) + ", "
                                           + std::to_string(n) + ") != 1");
  }
  TwistSpinParams p;
  p.m       = m;
  p.n       = n;
  p.epsilon = m >= 0 ? 1 : -1;
  if (m == 0) {
    p.beta = 1;
  } else if (abs_m == 1) {
    p.beta = 0;
    p.q    = 0;
  } else {
    p.beta = solve_linear(n, p.epsilon, abs_m);
    p.q    = solve_linear(n, 1, abs_m);
  }
  return p;
}

TwistSpinParams positive_params(TwistSpinParams const& p) {
  return make_params(std::labs(p.m), p.n);
}

void LinPresentation::validate() const {
  if (genus < 1) {
    throw std::invalid_argument("Lin data needs genus >= 1");
  }
  auto const words = static_cast<std::size_t>(surface_count());
  if (alpha.size() != words || beta.size() != words) {
    throw std::invalid_argument("Lin data needs 2g alpha and 2g beta words");
  }
  for (auto const* family : {&alpha, &beta}) {
    for (auto const& w : *family) {
      if (w.max_generator() > surface_count()) {
        throw std::invalid_argument("Lin word references x_" + std::to_string(w.max_generator())
                                    + " beyond 2g");
      }
    }
  }
}

namespace {

  IntMatrix exponents(std::vector<Word> const& words, int count) {
    IntMatrix m(words.size(), static_cast<std::size_t>(count));
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (int j = 1; j <= count; ++j) {
        m(i, static_cast<std::size_t>(j - 1)) = words[i].exponent_sum(j);
      }
    }
    return m;
  }

  // tau^level x~_i occupies generator level * 2g + i.
  Word lift(Word const& w, long level, int surface_count) {
    std::vector<int> letters;
    letters.reserve(w.size());
    int const offset = static_cast<int>(level) * surface_count;
    for (int letter : w.letters()) {
      letters.push_back(letter > 0 ? letter + offset : letter - offset);
    }
    return Word(std::move(letters));
  }

  void add_surface_generators(Presentation& P, LinPresentation const& L, long levels) {
    for (long j = 0; j < levels; ++j) {
      for (int i = 1; i <= L.surface_count(); ++i) {
        P.add_generator("x" + std::to_string(i) + "_" + std::to_string(j), GeneratorRole::Surface,
                        i, static_cast<int>(j));
      }
    }
  }

  void add_cover_relators(Presentation& P, LinPresentation const& L, long m) {
    int const s = L.surface_count();
    for (long j = 0; j < m; ++j) {
      long const prev = positive_mod(j - 1, m);
      for (int i = 0; i < s; ++i) {
        P.relators.push_back(lift(L.alpha[i], j, s) * lift(L.beta[i], prev, s).inverse());
      }
    }
  }

}  // namespace

IntMatrix alpha_exponents(LinPresentation const& L) {
  L.validate();
  return exponents(L.alpha, L.surface_count());
}

IntMatrix beta_exponents(LinPresentation const& L) {
  L.validate();
  return exponents(L.beta, L.surface_count());
}

Presentation lin_group(LinPresentation const& L) {
  L.validate();
  Presentation P;
  for (int i = 1; i <= L.surface_count(); ++i) {
    P.add_generator("x" + std::to_string(i), GeneratorRole::Surface, i, 0);
  }
  auto const mu = static_cast<int>(P.add_generator("mu", GeneratorRole::Meridian));
  P.meridian    = static_cast<std::size_t>(mu);
  for (int i = 0; i < L.surface_count(); ++i) {
    P.relators.push_back(generator(mu) * L.alpha[i] * generator(-mu) * L.beta[i].inverse());
  }
  return P;
}

std::vector<long> lin_grading(LinPresentation const& L) {
  std::vector<long> grading(static_cast<std::size_t>(L.surface_count()), 0);
  grading.push_back(1);
  return grading;
}

Presentation btws_presentation(Presentation const& K, TwistSpinParams const& p) {
  if (!K.meridian) {
    throw Error(ErrorKind::MeridianUnset, "knot presentation has no meridian generator");
  }
  K.validate();
  Presentation P;
  P.generators = K.generators;
  P.relators   = K.relators;
  auto const h = static_cast<int>(P.add_generator("h", GeneratorRole::Other));
  for (int y = 1; y < h; ++y) {
    P.relators.push_back(freegroup::commutator(generator(y), generator(h)));
  }
  int const y1 = static_cast<int>(*K.meridian);
  P.relators.push_back(generator(y1).power(std::labs(p.m)) * generator(h).power(p.beta));
  P.meridian.reset();
  return P;
}

Presentation branched_cover_presentation(LinPresentation const& L, long m) {
  L.validate();
  if (m < 1) {
    throw Error(ErrorKind::NonPositiveM, "branched cover needs m >= 1");
  }
  Presentation P;
  add_surface_generators(P, L, m);
  add_cover_relators(P, L, m);
  return P;
}

Presentation plotnick_presentation(LinPresentation const& L, TwistSpinParams const& p) {
  L.validate();
  if (p.m < 1) {
    throw Error(ErrorKind::NonPositiveM,
                "fibred presentation needs m >= 1 (normalize (m, n) -> (-m, n) first)");
  }
  Presentation P;
  add_surface_generators(P, L, p.m);
  auto const eta = static_cast<int>(P.add_generator("eta", GeneratorRole::Meridian));
  P.meridian     = static_cast<std::size_t>(eta);
  add_cover_relators(P, L, p.m);
  int const s = L.surface_count();
  for (long j = 0; j < p.m; ++j) {
    long const shifted = positive_mod(j + p.n, p.m);
    for (int i = 1; i <= s; ++i) {
      int const from = static_cast<int>(shifted) * s + i;
      int const to   = static_cast<int>(j) * s + i;
      P.relators.push_back(generator(eta) * generator(from) * generator(-eta) * generator(-to));
    }
  }
  return P;
}

Presentation reduced_presentation(LinPresentation const& L) {
  L.validate();
  Presentation P;
  add_surface_generators(P, L, 1);
  auto const eta = static_cast<int>(P.add_generator("eta", GeneratorRole::Meridian));
  P.meridian     = static_cast<std::size_t>(eta);
  for (int i = 0; i < L.surface_count(); ++i) {
    P.relators.push_back(generator(eta) * L.alpha[i] * generator(-eta) * L.beta[i].inverse());
  }
  return P;
}

namespace {

  [[noreturn]] void bad_lin(std::size_t line, std::string const& what) {
    throw Error(ErrorKind::MalformedToken, "Lin data line " + std::to_string(line) + ": " + what);
  }

  Word parse_word(std::istringstream& in, std::size_t line) {
    std::vector<int> letters;
    std::string      token;
    while (in >> token) {
      try {
        std::size_t used   = 0;
        int const   letter = std::stoi(token, &used);
        if (used != token.size() || letter == 0) {
          bad_lin(line, "bad letter '" + token + "'");
        }
        letters.push_back(letter);
      } catch (std::logic_error const&) {
        bad_lin(line, "bad letter '" + token + "'");
      }
    }
    return Word(std::move(letters));
  }

}  // namespace

std::vector<LinPresentation> parse_lin_records(std::string_view text) {
  std::vector<LinPresentation> records;
  std::optional<LinPresentation> current;
  std::istringstream             in{std::string(text)};
  std::string                    raw;
  std::size_t                    line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::istringstream line(raw);
    std::string        keyword;
    if (!(line >> keyword)) {
      continue;
    }
    if (keyword == "knot") {
      if (current) {
        bad_lin(line_no, "record '" + current->name + "' lacks 'end'");
      }
      LinPresentation L;
      if (!(line >> L.name >> L.genus) || L.genus < 1) {
        bad_lin(line_no, "expected 'knot <name> <genus>'");
      }
      current = std::move(L);
    } else if (keyword == "alpha" || keyword == "beta") {
      if (!current) {
        bad_lin(line_no, "word outside a record");
      }
      auto& family = keyword == "alpha" ? current->alpha : current->beta;
      family.push_back(parse_word(line, line_no));
    } else if (keyword == "end") {
      if (!current) {
        bad_lin(line_no, "'end' outside a record");
      }
      try {
        current->validate();
      } catch (std::invalid_argument const& e) {
        bad_lin(line_no, current->name + ": " + e.what());
      }
      records.push_back(std::move(*current));
      current.reset();
    } else {
      bad_lin(line_no, "unknown keyword '" + keyword + "'");
    }
  }
  if (current) {
    bad_lin(line_no, "record '" + current->name + "' lacks 'end'");
  }
  return records;
}

std::string render_lin_record(LinPresentation const& L) {
  std::ostringstream out;
  out << "knot " << L.name << ' ' << L.genus << '\n';
  for (auto const* family : {&L.alpha, &L.beta}) {
    for (auto const& w : *family) {
      out << (family == &L.alpha ? "alpha" : "beta");
      for (int letter : w.letters()) {
        out << ' ' << letter;
      }
      out << '\n';
    }
  }
  out << "end\n";
  return out.str();
}

}  // namespace btws::twistspin
