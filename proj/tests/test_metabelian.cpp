#include "support.hpp"

#include "btws/error.hpp"
#include "btws/invariants.hpp"
#include "btws/metabelian.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace btws;
using namespace btws::metabelian;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

std::vector<DihedralElement> group(long D) {
  std::vector<DihedralElement> all;
  for (long a = 0; a < 2 * D; ++a) {
    all.push_back(DihedralElement::rotation(D, a));
    all.push_back(DihedralElement::reflection(D, a));
  }
  return all;
}

KnotData knot(char const* name, char const* pd) {
  KnotData k;
  k.name    = name;
  k.lin     = fixtures::lin(name);
  k.diagram = notation::parse_pd(pd);
  return k;
}

std::vector<std::pair<long, long>> const kGrid{{2, 1}, {4, 1}, {2, 3}, {4, 3}, {3, 1},
                                               {3, 2}, {5, 2}, {0, 1}, {1, 1}, {6, 1}};

}  // namespace

TEST_CASE("DihedralElement multiplication matches SL(2,C) matrices") {
  for (long D : {1L, 3L, 5L}) {
    auto const G = group(D);
    CHECK(G.size() == static_cast<std::size_t>(4 * D));
    for (auto const& x : G) {
      CHECK(x * x.inverse() == DihedralElement::identity(D));
      for (auto const& y : G) {
        CHECK(oracle::close(oracle::matrix(x * y), oracle::mul(oracle::matrix(x), oracle::matrix(y))));
      }
    }
  }
  auto const eta = DihedralElement::reflection(3, 0);
  CHECK(oracle::close(oracle::matrix(eta), {0, -1, 1, 0}));
  CHECK(eta * eta == DihedralElement::rotation(3, 3));
  CHECK((eta * eta).is_central());
  for (auto const& x : group(5)) {
    if (x.is_reflection()) {
      CHECK(x * x == DihedralElement::rotation(5, 5));
    }
  }
  CHECK_THROWS_AS(DihedralElement::rotation(4, 1), Error);
}

TEST_CASE("count_by_formula") {
  CHECK(count_by_formula(3, 2) == 1);
  CHECK(count_by_formula(7, 5) == 0);
  CHECK(count_by_formula(1, 2) == 0);
  CHECK(count_by_formula(13, 0) == 6);
  CHECK(count_by_formula(13, -4) == 6);
  CHECK(kind_of([] { count_by_formula(4, 2); }) == ErrorKind::EvenDeterminant);
}

TEST_CASE("character_condition_matrix") {
  auto const M3 = character_condition_matrix(fixtures::lin("3_1"));
  CHECK(M3 == IntMatrix{{-2, 1}, {1, -2}});
  CHECK(abs(determinant(M3)) == invariants::determinant_of_seifert({{{-1, 1}, {0, -1}}}));
  auto const M4 = character_condition_matrix(fixtures::lin("4_1"));
  CHECK(abs(determinant(M4)) == invariants::determinant_of_seifert({{{1, 1}, {0, -1}}}));
  twistspin::LinPresentation trivial{"t", 1, {freegroup::Word{}, freegroup::Word{}},
                                     {freegroup::Word{}, freegroup::Word{}}};
  CHECK(character_condition_matrix(trivial) == IntMatrix(2, 2));
}

TEST_CASE("enumerate_characters examples") {
  auto const classes = enumerate_characters({{-2, 1}, {1, -2}}, 3);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].representative.c == std::vector<long>{1, 2});
  CHECK(classes[0].partner().c == std::vector<long>{2, 1});

  CHECK(enumerate_characters({{2, 1}, {1, -2}}, 5).size() == 2);
  CHECK(enumerate_characters({{1, 0}, {0, 1}}, 1).empty());
  CHECK(kind_of([] { enumerate_characters({{-2, 1}, {1, -2}}, 5); }) ==
        ErrorKind::DeterminantMismatch);
  CHECK(kind_of([] { enumerate_characters({{2, 0}, {0, 1}}, 2); }) == ErrorKind::EvenDeterminant);
}

TEST_CASE("property: Smith and scan enumerations agree") {
  std::mt19937 rng(41);
  int          tested = 0;
  while (tested < 150) {
    std::uniform_int_distribution<std::size_t> dim(1, 3);
    std::size_t const                          k = dim(rng);
    IntMatrix const                            M = gen::matrix(rng, k, k, 4);
    Int const                                  d = abs(determinant(M));
    if (d == 0 || d % 2 == 0 || d > 60) {
      continue;
    }
    ++tested;
    long const D     = static_cast<long>(d);
    auto const smith = kernel_characters(M, D, EnumerationMode::Smith);
    auto const scan  = kernel_characters(M, D, EnumerationMode::BruteForce);
    CHECK(smith == scan);
    CHECK(static_cast<long>(scan.size()) == oracle::kernel_count(M, D));
    CHECK(static_cast<long>(scan.size()) == D);
    auto const classes = enumerate_characters(M, D);
    CHECK(static_cast<long>(classes.size()) == (D - 1) / 2);
    CHECK(classes == enumerate_characters(M, D, EnumerationMode::BruteForce));
    for (auto const& cls : classes) {
      CHECK(cls.representative.nontrivial());
      CHECK(cls.representative != cls.partner());
      CHECK(cls.representative.c < cls.partner().c);
    }
  }
}

TEST_CASE("extend_character") {
  Character const c{3, {1, 2}};
  auto const      ec = extend_character(c, twistspin::make_params(2, 1));
  REQUIRE(ec.levels.size() == 2);
  CHECK(ec.levels[0] == std::vector<long>{1, 2});
  CHECK(ec.levels[1] == std::vector<long>{2, 1});

  CHECK(kind_of([&] { extend_character(c, twistspin::make_params(3, 1)); }) ==
        ErrorKind::InconsistentExtension);
  CHECK(kind_of([&] { extend_character(c, twistspin::make_params(3, 2)); }) ==
        ErrorKind::InconsistentExtension);
  CHECK(kind_of([&] { extend_character(c, twistspin::make_params(1, 1)); }) ==
        ErrorKind::InconsistentExtension);
  CHECK(kind_of([&] { extend_character(c, twistspin::make_params(0, 1)); }) ==
        ErrorKind::NonPositiveM);

  Character const zero{3, {0, 0}};
  for (auto [m, n] : kGrid) {
    if (m < 1) {
      continue;
    }
    auto const z = extend_character(zero, twistspin::make_params(m, n));
    CHECK(z.levels.size() == static_cast<std::size_t>(m));
    for (auto const& level : z.levels) {
      CHECK(level == std::vector<long>{0, 0});
    }
  }
}

TEST_CASE("property: odd m never extends a nontrivial character") {
  for (long D : {3L, 5L, 7L}) {
    for (long m = 1; m <= 7; m += 2) {
      for (long n = 1; n <= 8; ++n) {
        if (std::gcd(m, n) != 1) {
          continue;
        }
        for (long a = 0; a < D; ++a) {
          for (long b = 0; b < D; ++b) {
            Character const c{D, {a, b}};
            if (c.nontrivial()) {
              CHECK_THROWS_AS(extend_character(c, twistspin::make_params(m, n)), Error);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("build_representation and verify_representation") {
  auto const L       = fixtures::lin("3_1");
  auto const p       = twistspin::make_params(2, 1);
  auto const ec      = extend_character({3, {1, 2}}, p);
  auto const reduced = twistspin::reduced_presentation(L);
  auto const rho     = build_representation(ec, reduced);
  CHECK(verify_representation(reduced, rho) == Verdict{Verdict::Kind::ValidIrreducible, std::nullopt});
  CHECK(oracle::relators_hold(reduced, rho));
  CHECK(rho.back() == DihedralElement::reflection(3, 0));
  CHECK(rho[0] == DihedralElement::rotation(3, 2));

  auto const full = twistspin::plotnick_presentation(L, p);
  CHECK(full.relators.size() == 8);
  auto const rho_full = build_representation(ec, full);
  CHECK(verify_representation(full, rho_full).kind == Verdict::Kind::ValidIrreducible);
  CHECK(oracle::relators_hold(full, rho_full));

  auto const trivial = build_representation(extend_character({3, {0, 0}}, p), full);
  CHECK(verify_representation(full, trivial).kind == Verdict::Kind::ValidReducible);

  Representation identity(reduced.generator_count(), DihedralElement::identity(3));
  CHECK(verify_representation(reduced, identity).kind == Verdict::Kind::ValidReducible);

  Representation bad = rho;
  bad.back()         = DihedralElement::identity(3);
  CHECK(verify_representation(reduced, bad) == Verdict{Verdict::Kind::Invalid, 0});
  CHECK_FALSE(oracle::relators_hold(reduced, bad));

  auto const spin = twistspin::btws_presentation(invariants::wirtinger(notation::parse_pd(fixtures::kTrefoilPD)), p);
  CHECK(kind_of([&] { build_representation(ec, spin); }) == ErrorKind::IncompatiblePresentation);
  auto const deep = twistspin::plotnick_presentation(L, twistspin::make_params(4, 1));
  CHECK(kind_of([&] { build_representation(ec, deep); }) == ErrorKind::IncompatiblePresentation);
}

TEST_CASE("property: verdicts agree with the matrix evaluator") {
  std::mt19937 rng(99);
  auto const   P = twistspin::reduced_presentation(fixtures::lin("4_1"));
  auto const   G = group(5);
  std::uniform_int_distribution<std::size_t> pick(0, G.size() - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    Representation rho;
    for (std::size_t g = 0; g < P.generator_count(); ++g) {
      rho.push_back(G[pick(rng)]);
    }
    CHECK(verify_representation(P, rho).valid() == oracle::relators_hold(P, rho));
  }
}

TEST_CASE("brute_force_count examples") {
  auto const K = invariants::wirtinger(notation::parse_pd(fixtures::kTrefoilPD));
  CHECK(brute_force_count(twistspin::btws_presentation(K, twistspin::make_params(2, 1)), 3) == 1);
  CHECK(brute_force_count(twistspin::btws_presentation(K, twistspin::make_params(3, 1)), 3) == 0);
  auto const U = invariants::wirtinger(notation::parse_pd(""));
  for (long D : {3L, 5L, 7L}) {
    CHECK(brute_force_count(twistspin::btws_presentation(U, twistspin::make_params(2, 1)), D) == 0);
  }
  auto const E = invariants::wirtinger(notation::parse_pd(fixtures::kFigureEightPD));
  BruteForceOptions tight;
  tight.max_space = 1e3;
  CHECK(kind_of([&] {
          brute_force_count(twistspin::btws_presentation(E, twistspin::make_params(2, 1)), 5, tight);
        }) == ErrorKind::SearchSpaceTooLarge);
}

TEST_CASE("brute_force_count: pruning audit") {
  auto const K = invariants::wirtinger(notation::parse_pd(fixtures::kTrefoilPD));
  BruteForceOptions full;
  full.prune = false;
  for (auto [m, n] : std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {0, 1}}) {
    auto const P = twistspin::btws_presentation(K, twistspin::make_params(m, n));
    CHECK(brute_force_count(P, 3, full) == brute_force_count(P, 3));
  }
  auto const L = twistspin::lin_group(fixtures::lin("4_1"));
  auto const P = twistspin::btws_presentation(L, twistspin::make_params(2, 1));
  CHECK(brute_force_count(P, 5, full) == 2);
}

TEST_CASE("brute_force_count is independent of partitioning") {
  auto const E = invariants::wirtinger(notation::parse_pd(fixtures::kFigureEightPD));
  auto const P = twistspin::btws_presentation(E, twistspin::make_params(2, 1));
  Int const  one = brute_force_count(P, 5);
  for (unsigned w : {2u, 3u, 4u, 7u, 64u}) {
    BruteForceOptions o;
    o.workers = w;
    CHECK(brute_force_count(P, 5, o) == one);
  }
  CHECK(one == 2);
}

TEST_CASE("cross-method agreement") {
  for (auto const& k : {knot("3_1", fixtures::kTrefoilPD), knot("4_1", fixtures::kFigureEightPD)}) {
    long const D = static_cast<long>(abs(determinant(character_condition_matrix(*k.lin))));
    for (auto [m, n] : kGrid) {
      for (long sign : {1L, -1L}) {
        if (m == 0 && sign < 0) {
          continue;
        }
        auto const p       = twistspin::make_params(sign * m, n);
        auto const formula = count_representations(k, p, Method::Formula);
        auto const chars   = count_representations(k, p, Method::Characters);
        auto const brute   = count_representations(k, p, Method::Brute);
        CHECK(formula.count == chars.count);
        CHECK(formula.count == brute.count);
        CHECK(formula.count == (m % 2 == 0 ? (D - 1) / 2 : 0));
        CHECK(static_cast<long>(chars.characters.size()) == chars.count);
        if (m == 0) {
          CHECK(formula.notes == std::vector<std::string>{"m=0: formula extended"});
        }
      }
    }
  }
}

TEST_CASE("count_representations: missing data and mismatches") {
  KnotData pd_only;
  pd_only.name    = "6_1";
  pd_only.diagram = notation::parse_pd(
      "X(1,4,2,5) X(7,10,8,11) X(3,9,4,8) X(9,3,10,2) X(5,12,6,1) X(11,6,12,7)");
  auto const p = twistspin::make_params(2, 1);
  CHECK(count_representations(pd_only, p, Method::Formula).count == 4);
  CHECK(kind_of([&] { count_representations(pd_only, p, Method::Characters); }) ==
        ErrorKind::MissingLinData);
  CHECK(kind_of([&] { count_representations(pd_only, p, Method::Brute); }) ==
        ErrorKind::SearchSpaceTooLarge);

  KnotData wrong = knot("3_1", fixtures::kTrefoilPD);
  wrong.determinant = 5;
  CHECK(kind_of([&] { count_representations(wrong, p, Method::Characters); }) ==
        ErrorKind::DeterminantMismatch);

  CHECK(parse_method("brute") == Method::Brute);
  CHECK_FALSE(parse_method("magic").has_value());
}

TEST_CASE("distinguish examples") {
  CHECK(distinguish({3, 2}, {5, 2}) == Distinction{true, 1});
  CHECK(distinguish({3, 2}, {7, 3}) == Distinction{true, 2});
  CHECK(distinguish({3, 2}, {3, 4}) == Distinction{false, std::nullopt});
  CHECK(distinguish({1, 2}, {3, 3}) == Distinction{false, std::nullopt});
  CHECK(distinguish({3, 3}, {1, 2}) == Distinction{false, std::nullopt});
  CHECK(distinguish({3, 3}, {5, 5}) == Distinction{false, std::nullopt});
  CHECK(distinguish({5, 0}, {3, 0}) == Distinction{true, 1});
  CHECK_THROWS_AS(distinguish({4, 2}, {3, 2}), Error);
}

TEST_CASE("property: distinguish depends only on determinants and parities") {
  std::mt19937                        rng(8);
  std::uniform_int_distribution<long> det(0, 8), m(-9, 9), shift(-5, 5);
  for (int trial = 0; trial < 2000; ++trial) {
    SpinSummary const a{2 * det(rng) + 1, m(rng)};
    SpinSummary const b{2 * det(rng) + 1, m(rng)};
    SpinSummary const a2{-a.determinant, a.m + 2 * shift(rng)};
    SpinSummary const b2{b.determinant, b.m + 2 * shift(rng)};
    auto const        v = distinguish(a, b);
    CHECK(v == distinguish(a2, b2));
    CHECK(v == distinguish(b, a));
    // an inequivalence verdict separates the representation counts
    if (v.inequivalent) {
      CHECK(count_by_formula(a.determinant, a.m) != count_by_formula(b.determinant, b.m));
    }
  }
}
