#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// Textual 1-knot input: planar-diagram (PD) codes and braid words.
//
// PD tuples follow the Knot Atlas convention: X(i,j,k,l) lists the four edge
// labels counterclockwise starting from the incoming under-strand, so the
// under-strand runs i -> k and the over-strand joins j and l.

namespace btws::notation {

// A PD code as written, before validation.
struct PDCode {
  std::vector<std::array<long, 4>> crossings;
};

struct Crossing {
  int under_in  = 0;  // i
  int over_j    = 0;  // j
  int under_out = 0;  // k
  int over_l    = 0;  // l
  int sign      = 0;  // +1 when the over-strand runs l -> j

  int over_in() const noexcept { return sign > 0 ? over_l : over_j; }
  int over_out() const noexcept { return sign > 0 ? over_j : over_l; }

  bool operator==(Crossing const&) const = default;
};

// Validated knot diagram. Edges are labelled 1..2c consecutively along the
// orientation (edge e is followed by e+1, and 2c by 1).
class Diagram {
 public:
  Diagram() = default;

  std::vector<Crossing> const& crossings() const noexcept { return _crossings; }
  std::size_t crossing_count() const noexcept { return _crossings.size(); }
  int edge_count() const noexcept { return 2 * static_cast<int>(_crossings.size()); }

  // Arc index (0-based) of every edge; arcs are maximal over-passing strands,
  // numbered in order of their smallest edge label. The unknot has one arc.
  std::vector<int> edge_arcs() const;
  std::size_t arc_count() const;

  bool operator==(Diagram const&) const = default;

  // Checks edge multiplicities, orientation consistency and that the edges
  // form one cycle; relabels edges along the orientation starting from the
  // smallest input label. Throws btws::Error.
  static Diagram from_pd(PDCode const& code);

 private:
  std::vector<Crossing> _crossings;
};

struct BraidWord {
  std::vector<int> letters;
  int strands = 1;

  bool operator==(BraidWord const&) const = default;
};

PDCode tokenize_pd(std::string_view text);
Diagram parse_pd(std::string_view text);
std::string render_pd(Diagram const& d);

BraidWord parse_braid(std::string_view text, int strands);
Diagram braid_closure(BraidWord const& b);

}  // namespace btws::notation
