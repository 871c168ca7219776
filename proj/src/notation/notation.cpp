#include "btws/notation.hpp"

#include "btws/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <utility>

namespace btws::notation {

namespace {

  struct Slot {
    std::size_t crossing;
    int         position;  // 0..3 within the PD tuple

    bool operator==(Slot const&) const = default;
  };

  void skip_separators(std::string_view text, std::size_t& pos) {
    while (pos < text.size()
           && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) {
      ++pos;
    }
  }

  void skip_space(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  [[noreturn]] void malformed(std::string_view text, std::size_t pos, std::string const& what) {
    std::ostringstream msg;
    msg << what << " at offset " << pos;
    if (pos < text.size()) {
      msg << " near '" << text.substr(pos, 12) << "'";
    }
    throw Error(ErrorKind::MalformedToken, msg.str());
  }

  long read_label(std::string_view text, std::size_t& pos) {
    skip_space(text, pos);
    long        value = 0;
    char const* first = text.data() + pos;
    char const* last  = text.data() + text.size();
    auto [ptr, ec]    = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) {
      malformed(text, pos, "expected an edge label");
    }
    if (value <= 0) {
      malformed(text, pos, "edge labels must be positive");
    }
    pos += static_cast<std::size_t>(ptr - first);
    skip_space(text, pos);
    return value;
  }

  void expect(std::string_view text, std::size_t& pos, char c) {
    if (pos >= text.size() || text[pos] != c) {
      malformed(text, pos, std::string("expected '") + c + "'");
    }
    ++pos;
  }

}  // namespace

PDCode tokenize_pd(std::string_view text) {
  PDCode      code;
  std::size_t pos = 0;
  skip_separators(text, pos);
  while (pos < text.size()) {
    expect(text, pos, 'X');
    skip_space(text, pos);
    expect(text, pos, '(');
    std::array<long, 4> tuple{};
    for (int k = 0; k < 4; ++k) {
      tuple[k] = read_label(text, pos);
      if (k < 3) {
        expect(text, pos, ',');
      }
    }
    expect(text, pos, ')');
    code.crossings.push_back(tuple);
    skip_separators(text, pos);
  }
  return code;
}

Diagram Diagram::from_pd(PDCode const& code) {
  std::size_t const c = code.crossings.size();
  Diagram           result;
  if (c == 0) {
    return result;
  }

  std::map<long, std::vector<Slot>> occurrences;
  for (std::size_t x = 0; x < c; ++x) {
    for (int p = 0; p < 4; ++p) {
      occurrences[code.crossings[x][p]].push_back(Slot{x, p});
    }
  }
  for (auto const& [label, slots] : occurrences) {
    if (slots.size() != 2) {
      throw Error(ErrorKind::EdgeMultiplicity,
                  "edge label " + std::to_string(label) + " appears "
                      + std::to_string(slots.size()) + " times");
    }
  }
  if (occurrences.size() != 2 * c) {
    throw Error(ErrorKind::EdgeMultiplicity,
                std::to_string(c) + " crossings need " + std::to_string(2 * c)
                    + " edge labels, found " + std::to_string(occurrences.size()));
  }

  auto label_at = [&](Slot s) { return code.crossings[s.crossing][s.position]; };
  auto other    = [&](Slot s) {
    auto const& slots = occurrences.at(label_at(s));
    return slots[0] == s ? slots[1] : slots[0];
  };

  // Walk the knot from the under-strand entering the first crossing. Entering
  // a slot and leaving through the opposite one is the only legal move.
  std::vector<std::array<bool, 4>> used(c, {false, false, false, false});
  std::vector<int>                 signs(c, 0);
  std::vector<long>                walk;  // original labels, in order of traversal
  Slot const                       start{0, 0};
  Slot                             enter = start;
  while (true) {
    if (enter.position == 2) {
      throw Error(ErrorKind::InconsistentOrientation,
                  "under-strand of crossing " + std::to_string(enter.crossing + 1)
                      + " is traversed against its orientation");
    }
    Slot exit{enter.crossing, (enter.position + 2) % 4};
    if (used[enter.crossing][enter.position] || used[exit.crossing][exit.position]) {
      throw Error(ErrorKind::InconsistentOrientation,
                  "crossing " + std::to_string(enter.crossing + 1) + " is traversed twice");
    }
    used[enter.crossing][enter.position] = true;
    used[exit.crossing][exit.position]   = true;
    if (enter.position == 1) {
      signs[enter.crossing] = -1;
    } else if (enter.position == 3) {
      signs[enter.crossing] = +1;
    }
    walk.push_back(label_at(exit));
    Slot next = other(exit);
    if (next == start) {
      break;
    }
    if (used[next.crossing][next.position]) {
      throw Error(ErrorKind::InconsistentOrientation,
                  "edge " + std::to_string(label_at(next)) + " closes a cycle early");
    }
    enter = next;
  }
  if (walk.size() != 2 * c) {
    throw Error(ErrorKind::SplitLink,
                "edges form more than one cycle (" + std::to_string(walk.size()) + " of "
                    + std::to_string(2 * c) + " traversed from crossing 1)");
  }

  auto const smallest = std::min_element(walk.begin(), walk.end()) - walk.begin();
  std::map<long, int> relabel;
  for (std::size_t k = 0; k < walk.size(); ++k) {
    relabel[walk[(smallest + k) % walk.size()]] = static_cast<int>(k) + 1;
  }

  result._crossings.reserve(c);
  for (std::size_t x = 0; x < c; ++x) {
    auto const& t = code.crossings[x];
    result._crossings.push_back(
        Crossing{relabel[t[0]], relabel[t[1]], relabel[t[2]], relabel[t[3]], signs[x]});
  }
  return result;
}

std::vector<int> Diagram::edge_arcs() const {
  int const e_count = edge_count();
  if (e_count == 0) {
    return {};
  }
  // ends_under[e]: edge e terminates at an under-crossing, so e+1 opens a new arc.
  std::vector<bool> ends_under(e_count + 1, false);
  for (auto const& x : _crossings) {
    ends_under[x.under_in] = true;
  }
  auto next = [e_count](int e) { return e == e_count ? 1 : e + 1; };
  auto prev = [e_count](int e) { return e == 1 ? e_count : e - 1; };

  std::vector<int> arcs(e_count + 1, -1);
  int              arc_id = 0;
  for (int e = 1; e <= e_count; ++e) {
    if (arcs[e] != -1) {
      continue;
    }
    int first = e;
    while (!ends_under[prev(first)]) {
      first = prev(first);
    }
    int cur = first;
    while (true) {
      arcs[cur] = arc_id;
      if (ends_under[cur]) {
        break;
      }
      cur = next(cur);
    }
    ++arc_id;
  }
  arcs.erase(arcs.begin());
  return arcs;
}

std::size_t Diagram::arc_count() const {
  if (_crossings.empty()) {
    return 1;
  }
  auto arcs = edge_arcs();
  return static_cast<std::size_t>(*std::max_element(arcs.begin(), arcs.end()) + 1);
}

Diagram parse_pd(std::string_view text) {
  return Diagram::from_pd(tokenize_pd(text));
}

std::string render_pd(Diagram const& d) {
  std::ostringstream out;
  bool               first = true;
  for (auto const& x : d.crossings()) {
    if (!first) {
      out << ' ';
    }
    first = false;
    out << "X(" << x.under_in << ',' << x.over_j << ',' << x.under_out << ',' << x.over_l
        << ')';
  }
  return out.str();
}

BraidWord parse_braid(std::string_view text, int strands) {
  if (strands < 1) {
    throw Error(ErrorKind::LetterOutOfRange, "strand count must be positive");
  }
  BraidWord          b;
  b.strands = strands;
  std::istringstream in{std::string(text)};
  std::string        token;
  while (in >> token) {
    int         value = 0;
    char const* first = token.data();
    char const* last  = token.data() + token.size();
    if (*first == '+') {
      ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      throw Error(ErrorKind::MalformedToken, "braid letter '" + token + "'");
    }
    if (value == 0) {
      throw Error(ErrorKind::ZeroLetter, "braid letters must be nonzero");
    }
    if (std::abs(value) >= strands) {
      throw Error(ErrorKind::LetterOutOfRange,
                  "letter " + token + " needs more than " + std::to_string(strands)
                      + " strands");
    }
    b.letters.push_back(value);
  }
  return b;
}

Diagram braid_closure(BraidWord const& b) {
  for (int letter : b.letters) {
    if (letter == 0 || std::abs(letter) >= b.strands) {
      throw Error(ErrorKind::LetterOutOfRange, "letter " + std::to_string(letter));
    }
  }
  if (b.letters.empty()) {
    if (b.strands == 1) {
      return Diagram{};
    }
    throw Error(ErrorKind::NotAKnot, "closure of the trivial braid on "
                                         + std::to_string(b.strands) + " strands");
  }

  // Edge ids: crossing t emits 2t (top-left) and 2t+1 (top-right). Negative
  // values -1-p stand for the bottom of strand position p until the closure
  // identifies them with whatever leaves the top of that position.
  struct Inputs {
    int left;
    int right;
  };
  std::size_t const   c = b.letters.size();
  std::vector<int>    open(b.strands);
  std::vector<Inputs> inputs(c);
  for (int p = 0; p < b.strands; ++p) {
    open[p] = -1 - p;
  }
  for (std::size_t t = 0; t < c; ++t) {
    int const i = std::abs(b.letters[t]) - 1;
    inputs[t]   = Inputs{open[i], open[i + 1]};
    open[i]     = static_cast<int>(2 * t);
    open[i + 1] = static_cast<int>(2 * t + 1);
  }
  for (int p = 0; p < b.strands; ++p) {
    if (open[p] < 0) {
      throw Error(ErrorKind::NotAKnot,
                  "strand " + std::to_string(p + 1) + " closes up without crossings");
    }
  }
  auto resolve = [&](int id) { return id < 0 ? open[-1 - id] : id; };

  // Where each edge enters: (crossing, 0 = left input, 1 = right input).
  std::vector<std::pair<std::size_t, int>> head(2 * c);
  for (std::size_t t = 0; t < c; ++t) {
    inputs[t].left                  = resolve(inputs[t].left);
    inputs[t].right                 = resolve(inputs[t].right);
    head[inputs[t].left]            = {t, 0};
    head[inputs[t].right]           = {t, 1};
  }

  std::vector<int> label(2 * c, 0);
  int              id = 0;
  for (int k = 1;; ++k) {
    label[id]        = k;
    auto [t, side]   = head[id];
    // Strands cross: entering on the left leaves top-right and vice versa.
    id = static_cast<int>(2 * t) + (side == 0 ? 1 : 0);
    if (id == 0) {
      if (static_cast<std::size_t>(k) != 2 * c) {
        throw Error(ErrorKind::NotAKnot, "braid closure has more than one component");
      }
      break;
    }
    if (label[id] != 0) {
      throw Error(ErrorKind::NotAKnot, "braid closure has more than one component");
    }
  }

  PDCode code;
  for (std::size_t t = 0; t < c; ++t) {
    int const in_l  = label[inputs[t].left];
    int const in_r  = label[inputs[t].right];
    int const out_l = label[2 * t];
    int const out_r = label[2 * t + 1];
    if (b.letters[t] > 0) {
      // Over-strand SW -> NE, under-strand SE -> NW.
      code.crossings.push_back({in_r, out_r, out_l, in_l});
    } else {
      // Over-strand SE -> NW, under-strand SW -> NE.
      code.crossings.push_back({in_l, in_r, out_r, out_l});
    }
  }
  Diagram d = Diagram::from_pd(code);
  for (std::size_t t = 0; t < c; ++t) {
    if (d.crossings()[t].sign != (b.letters[t] > 0 ? 1 : -1)) {
      throw std::logic_error("braid_closure: crossing sign disagrees with letter");
    }
  }
  return d;
}

}  // namespace btws::notation
