#pragma once

#include <map>
#include <vector>

#include "wdc/core.hpp"

// Weight diagrams on the integer line and the derived structures: arrow
// diagrams (with their dual), cap diagrams, cross-circle sequences and the
// intervals they tile.
namespace wdc {

enum class Marker { none, gt, lt };

struct Cell {
  int x = 0;  // number of stacked x symbols
  Marker marker = Marker::none;
  int symbols() const { return x + (marker == Marker::none ? 0 : 1); }
  bool operator==(const Cell&) const = default;
};

/// Sparse diagram: positions absent from the map are empty. Stored cells
/// always carry at least one symbol.
struct WeightDiagram {
  std::map<int, Cell> cells;

  Cell at(int p) const {
    auto it = cells.find(p);
    return it == cells.end() ? Cell{} : it->second;
  }
  bool empty_at(int p) const { return cells.find(p) == cells.end(); }
  bool operator==(const WeightDiagram&) const = default;
};

/// Diagram of an arbitrary shifted weight: position p holds min(k,s)
/// crosses plus a '>' when k > s or a '<' when k < s, where k counts eps
/// coordinates equal to p and s counts delta symbols at p.
WeightDiagram weight_diagram(const ShiftedWeight& w);

/// Number of crosses, with multiplicity.
int atypicality(const ShiftedWeight& w);

/// Arrows start at a_m < ... < a_1 and are drawn in that order, each ending
/// at the first free position c >= start that carries no delta symbol and
/// is not a previous endpoint. M_i counts delta symbols left of k_i.
struct ArrowDiagram {
  std::vector<int> start;  // start[i-1] = a_i
  std::vector<int> k;      // endpoints, strictly decreasing in i
  std::vector<int> M;
};

ArrowDiagram arrow_diagram(const ShiftedWeight& w);

/// Mirror construction: arrows out of delta symbols running leftward, the
/// j-th ending at l_j. N_j counts eps coordinates left of the j-th delta
/// symbol. Satisfies l_j == -k_j of the mirrored weight (b|a).
struct DualArrowDiagram {
  std::vector<int> start;  // start[j-1] = -b_j
  std::vector<int> l;
  std::vector<int> N;
};

DualArrowDiagram dual_arrow_diagram(const ShiftedWeight& w);

struct Cap {
  int start = 0;
  int end = 0;
  bool operator==(const Cap&) const = default;
};

/// caps[s-1] joins the s-th cross (left to right) to its endpoint c_s,
/// drawn right to left, each cap ending at the first empty position right
/// of its cross not used by a previously drawn cap. On every cap the
/// crosses weakly outnumber the empty positions, with equality only at the
/// endpoint.
struct CapDiagram {
  std::vector<Cap> caps;
};

CapDiagram cap_diagram(const ShiftedWeight& w);

/// Chain of arrows starting at a cross, each ending where the next begins,
/// the last one ending at an empty position. rows lists the arrow rows in
/// order of travel (strictly decreasing).
struct CrossCircSequence {
  std::vector<int> rows;
  int start = 0;
  int end = 0;
  bool operator==(const CrossCircSequence&) const = default;
};

std::vector<CrossCircSequence> cross_circ_sequences(const ShiftedWeight& w);

struct Segment {
  int lo = 0;
  int hi = 0;
  bool operator==(const Segment&) const = default;
  auto operator<=>(const Segment&) const = default;
};

/// Connected components of the cross-circle sequences under segment
/// intersection, left to right.
std::vector<Segment> intervals(const ShiftedWeight& w);

}  // namespace wdc
