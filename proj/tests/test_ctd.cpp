#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "wdc/ctd.hpp"

using namespace wdc;

namespace {

ShiftedWeight sw(const char* text) { return ShiftedWeight::parse(text); }
BaseWord word(const char* text) { return BaseWord::parse(text); }

}  // namespace

TEST_CASE("change tracking diagram windows") {
  Ctd c = ctd(sw("4 3 0 | 0 -1 -3 -4 -5"));
  REQUIRE(c.m == 3);
  REQUIRE(c.n == 5);
  CHECK(c.window[2] == std::pair<int, int>{1, 2});
  CHECK(c.window[1] == std::pair<int, int>{3, 5});
  CHECK(c.window[0] == std::pair<int, int>{3, 5});

  Ctd c2 = ctd(sw("5 4 3 0 -1 | 1 0 -3 -4 -5"));
  CHECK(c2.window[0] == std::pair<int, int>{3, 5});
  CHECK(c2.window[1] == std::pair<int, int>{3, 5});
  CHECK(c2.window[2] == std::pair<int, int>{3, 5});
  CHECK(c2.window[3] == std::pair<int, int>{1, 2});
  CHECK(c2.window[4] == std::pair<int, int>{1, 2});

  // typical weight: all arrows trivial, grid all zero
  Ctd c3 = ctd(sw("5 3 | 0 -1"));
  for (int i = 1; i <= 2; ++i) {
    CHECK(c3.row_empty(i));
    for (int j = 1; j <= 2; ++j) CHECK_FALSE(c3.bit(i, j));
  }
  CHECK(c3.ones().empty());
}

TEST_CASE("transport by the closed formula") {
  CHECK(shifted_weight_for_base(sw("4 3 0 | 0 -1 -3 -4 -5"),
                                word("edddeedd")) ==
        sw("4 4 2 | -1 -2 -4 -4 -5"));
  ShiftedWeight w = sw("6 4 3 0 | 0 -1 -4 -5");
  CHECK(shifted_weight_for_base(w, BaseWord::distinguished(4, 4)) == w);
  // the counterexample witness base
  IncomparableSet s;
  s.roots = {{1, 3}, {2, 4}, {3, 5}};
  BaseWord witness = base_from_incomparable_set(s, 5, 5);
  CHECK(shifted_weight_for_base(sw("5 4 3 0 -1 | 1 0 -3 -4 -5"), witness) ==
        sw("5 5 5 2 1 | -1 -2 -5 -5 -5"));
  CHECK_THROWS_AS(
      shifted_weight_for_base(sw("0 | 0"), BaseWord::distinguished(2, 1)),
      Error);
  CHECK_THROWS_AS(
      shifted_weight_for_base(sw("4 6 5 2 | -2 -4 -5 -6"),
                              BaseWord::distinguished(4, 4)),
      Error);
}

TEST_CASE("rho convention") {
  CHECK(rho(1, 1) == sw("0 | 0"));
  // the defining property of a Weyl vector, in the integral normalization:
  // pairing 1 with each even simple root and 0 with the odd one
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      ShiftedWeight r = rho(m, n);
      for (int i = 1; i < m; ++i) CHECK(r.eps(i) - r.eps(i + 1) == 1);
      for (int j = 1; j < n; ++j)
        CHECK(-r.delta_coord(j) + r.delta_coord(j + 1) == -1);
      if (m >= 1 && n >= 1) CHECK(r.eps(m) + r.delta_coord(1) == 0);
    }
}

TEST_CASE("unshifted weight for a base") {
  // gl(1|1), rho = (0|0)
  CHECK(weight_for_base(sw("0 | 0"), word("de")) == sw("0 | 0"));
  CHECK(weight_for_base(sw("1 | 0"), word("de")) == sw("0 | 1"));
  CHECK(weight_for_base(sw("1 | 0"), word("ed")) == sw("1 | 0"));
  // supplying the unshifted weight explicitly gives the same answer
  CHECK(weight_for_base(sw("1 | 0"), sw("1 | 0"), word("de")) == sw("0 | 1"));
}

TEST_CASE("anti-distinguished diagram via cap moves") {
  WeightDiagram anti = anti_distinguished_diagram(sw("6 4 3 0 | 0 -1 -4 -5"));
  WeightDiagram expect;
  expect.cells[1] = Cell{0, Marker::lt};
  expect.cells[2] = Cell{1, Marker::none};
  expect.cells[3] = Cell{0, Marker::gt};
  expect.cells[5] = Cell{0, Marker::lt};
  expect.cells[6] = Cell{0, Marker::gt};
  expect.cells[7] = Cell{1, Marker::none};
  CHECK(anti == expect);

  ShiftedWeight typical = sw("5 3 | 0 -1");
  CHECK(anti_distinguished_diagram(typical) == weight_diagram(typical));

  WeightDiagram tiny = anti_distinguished_diagram(sw("0 | 0"));
  WeightDiagram tiny_expect;
  tiny_expect.cells[1] = Cell{1, Marker::none};
  CHECK(tiny == tiny_expect);

  // equals the transported diagram for the anti-distinguished base
  for (const char* text :
       {"6 4 3 0 | 0 -1 -4 -5", "5 4 3 0 -1 | 1 0 -3 -4 -5", "0 | 0"}) {
    ShiftedWeight w = sw(text);
    CHECK(anti_distinguished_diagram(w) ==
          weight_diagram(shifted_weight_for_base(
              w, BaseWord::anti_distinguished(w.m(), w.n()))));
  }
}

TEST_CASE("walk from the distinguished to the anti-distinguished base") {
  std::vector<ShiftedWeight> walk =
      distinguished_to_anti_walk(sw("0 | 0"));
  REQUIRE(walk.size() == 2);
  CHECK(walk[0] == sw("0 | 0"));
  CHECK(walk[1] == sw("1 | -1"));

  ShiftedWeight typical = sw("5 3 | 0 -1");
  for (const ShiftedWeight& step : distinguished_to_anti_walk(typical))
    CHECK(weight_diagram(step) == weight_diagram(typical));

  // crosses travel 0->2, then row 3 stays, 4->6, 6->7
  ShiftedWeight w = sw("6 4 3 0 | 0 -1 -4 -5");
  std::vector<ShiftedWeight> steps = distinguished_to_anti_walk(w);
  REQUIRE(steps.size() == 5);
  CHECK(weight_diagram(steps[0]) == weight_diagram(w));
  CHECK(steps[1] == sw("6 4 3 2 | -1 -2 -4 -5"));
  CHECK(weight_diagram(steps[2]) == weight_diagram(steps[1]));
  CHECK(weight_diagram(steps[4]) == anti_distinguished_diagram(w));
}

TEST_CASE("atom index sets") {
  std::vector<Atom> atoms = atom_index_sets(sw("6 5 4 3 0 | 0 -1 -4 -6"));
  REQUIRE(atoms.size() == 2);
  CHECK(atoms[0].pos == std::vector<int>{5});
  CHECK(atoms[0].neg == std::vector<int>{1, 2});
  CHECK(atoms[0].segment == Segment{0, 2});
  CHECK(atoms[1].pos == std::vector<int>{1, 2, 3});
  CHECK(atoms[1].neg == std::vector<int>{3, 4});
  CHECK(atoms[1].segment == Segment{4, 8});

  CHECK(atom_index_sets(sw("5 3 | 0 -1")).empty());

  std::vector<Atom> tiny = atom_index_sets(sw("0 | 0"));
  REQUIRE(tiny.size() == 1);
  CHECK(tiny[0].pos == std::vector<int>{1});
  CHECK(tiny[0].neg == std::vector<int>{1});
}

TEST_CASE("atom weights") {
  ShiftedWeight w = sw("6 5 4 3 0 | 0 -1 -4 -6");
  std::vector<Atom> atoms = atom_index_sets(w);
  REQUIRE(atoms.size() == 2);
  CHECK(atom_weight(w, atoms[0]) == sw("0 | 0 -1"));
  CHECK(atom_weight(w, atoms[1]) == sw("6 5 4 | -4 -6"));
  Atom bogus;
  bogus.pos = {1};
  bogus.neg = {1};
  bogus.segment = {0, 1};
  CHECK_THROWS_AS(atom_weight(w, bogus), Error);
}

TEST_CASE("transport preserves atypicality and respects the arrow bounds") {
  ShiftedWeight w = sw("4 3 0 | 0 -1 -3 -4 -5");
  ArrowDiagram ad = arrow_diagram(w);
  const int atyp = atypicality(w);
  BaseWord base = first_base_word(3, 5);
  do {
    ShiftedWeight t = shifted_weight_for_base(w, base);
    CHECK(atypicality(t) == atyp);
    for (int i = 1; i <= 3; ++i) {
      CHECK(w.eps(i) <= t.eps(i));
      CHECK(t.eps(i) <= ad.k[static_cast<size_t>(i) - 1]);
    }
  } while (next_base_word(base));
}
