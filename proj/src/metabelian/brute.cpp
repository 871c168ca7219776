#include "btws/error.hpp"
#include "btws/metabelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <thread>

namespace btws::metabelian {

namespace {

  using Invariant = std::vector<long>;

  class Search {
   public:
    Search(Presentation const& P, long D, bool prune) : _P(P), _D(D) {
      std::size_t const n = P.generator_count();
      _ready.resize(n);
      for (std::size_t r = 0; r < P.relators.size(); ++r) {
        int top = 0;
        for (int letter : P.relators[r].letters()) {
          top = std::max(top, std::abs(letter));
        }
        if (top > 0) {
          _ready[static_cast<std::size_t>(top - 1)].push_back(r);
        }
      }
      for (auto const& g : P.generators) {
        std::vector<DihedralElement> c;
        bool const rotations   = !prune || g.role != freegroup::GeneratorRole::Meridian;
        bool const reflections = !prune || g.role != freegroup::GeneratorRole::Surface;
        for (long a = 0; a < 2 * D; ++a) {
          if (rotations) {
            c.push_back(DihedralElement::rotation(D, a));
          }
          if (reflections) {
            c.push_back(DihedralElement::reflection(D, a));
          }
        }
        _candidates.push_back(std::move(c));
      }
    }

    double space() const {
      double s = 1;
      for (auto const& c : _candidates) {
        s *= static_cast<double>(c.size());
      }
      return s;
    }

    std::size_t first_choices() const { return _candidates.empty() ? 0 : _candidates[0].size(); }

    std::set<Invariant> run(std::size_t lo, std::size_t hi) const {
      std::set<Invariant> found;
      Representation      rho(_candidates.size());
      for (std::size_t k = lo; k < hi; ++k) {
        rho[0] = _candidates[0][k];
        if (relators_hold(rho, 0)) {
          descend(rho, 1, found);
        }
      }
      return found;
    }

   private:
    void descend(Representation& rho, std::size_t g, std::set<Invariant>& found) const {
      if (g == rho.size()) {
        if (verify_representation(_P, rho).kind == Verdict::Kind::ValidIrreducible) {
          found.insert(invariant(rho));
        }
        return;
      }
      for (auto const& x : _candidates[g]) {
        rho[g] = x;
        if (relators_hold(rho, g)) {
          descend(rho, g + 1, found);
        }
      }
    }

    bool relators_hold(Representation const& rho, std::size_t g) const {
      for (std::size_t r : _ready[g]) {
        DihedralElement acc = DihedralElement::identity(_D);
        for (int letter : _P.relators[r].letters()) {
          auto const& x = rho[static_cast<std::size_t>(std::abs(letter) - 1)];
          acc           = acc * (letter > 0 ? x : x.inverse());
        }
        if (acc != DihedralElement::identity(_D)) {
          return false;
        }
      }
      return true;
    }

    // Rotation exponents and reflection offsets from the first reflection;
    // conjugating by diagonal matrices fixes both, conjugating by the
    // meridian image negates both.
    Invariant invariant(Representation const& rho) const {
      long const two_d  = 2 * _D;
      auto const anchor = std::find_if(rho.begin(), rho.end(),
                                       [](auto const& x) { return x.is_reflection(); });
      long const base   = anchor == rho.end() ? 0 : anchor->exponent();
      Invariant  v, w;
      for (auto const& x : rho) {
        long const a   = x.is_reflection() ? x.exponent() - base : x.exponent();
        long const tag = x.is_reflection() ? two_d : 0;
        v.push_back(tag + (a % two_d + two_d) % two_d);
        w.push_back(tag + ((-a) % two_d + two_d) % two_d);
      }
      return std::min(v, w);
    }

    Presentation const&                       _P;
    long                                      _D;
    std::vector<std::vector<std::size_t>>     _ready;
    std::vector<std::vector<DihedralElement>> _candidates;
  };

}  // namespace

Int brute_force_count(Presentation const& P, long D, BruteForceOptions const& options) {
  if (D < 1 || D % 2 == 0) {
    throw Error(ErrorKind::EvenDeterminant, "brute-force target needs odd D >= 1");
  }
  P.validate();
  Search const search(P, D, options.prune);
  if (search.space() > options.max_space) {
    throw Error(ErrorKind::SearchSpaceTooLarge,
                "assignment space exceeds " + std::to_string(options.max_space));
  }
  std::size_t const choices = search.first_choices();
  if (choices == 0) {
    return 0;
  }
  std::size_t const workers = std::clamp<std::size_t>(options.workers, 1, choices);

  std::vector<std::set<Invariant>> partial(workers);
  if (workers == 1) {
    partial[0] = search.run(0, choices);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        partial[w] = search.run(w * choices / workers, (w + 1) * choices / workers);
      });
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  std::set<Invariant> all;
  for (auto& s : partial) {
    all.merge(s);
  }
  return static_cast<long>(all.size());
}

}  // namespace btws::metabelian
