#pragma once

#include <utility>
#include <vector>

#include "wdc/core.hpp"
#include "wdc/diagrams.hpp"

// The change tracking diagram and everything it buys: closed-form weight
// transport to any base, the distinguished-to-anti walk, and the atom
// decomposition.
namespace wdc {

/// Boolean grid over the right odd roots, stored as one contiguous column
/// window per row (the rows are guaranteed contiguous).
struct Ctd {
  int m = 0;
  int n = 0;
  /// window[i-1] = (jmin, jmax); empty rows have jmin > jmax.
  std::vector<std::pair<int, int>> window;

  bool bit(int i, int j) const {
    const auto& [lo, hi] = window[static_cast<size_t>(i) - 1];
    return lo <= j && j <= hi;
  }
  bool row_empty(int i) const {
    const auto& [lo, hi] = window[static_cast<size_t>(i) - 1];
    return lo > hi;
  }
  std::vector<RightOddRoot> ones() const;
  bool operator==(const Ctd&) const = default;
};

/// Row i is [M_i + 1 - (k_i - a_i), M_i], empty when the i-th arrow is
/// trivial.
Ctd ctd(const ShiftedWeight& w);

/// Transported shifted weight: adds every root of b_sigma(word) whose CTD
/// bit is set. Coordinates keep their identity (no re-sorting).
ShiftedWeight shifted_weight_for_base(const ShiftedWeight& w,
                                      const BaseWord& word);

/// Integral Weyl-vector convention used when a caller does not supply the
/// unshifted weight: the half-sum vector shifted by r(1..1|-1..-1) with
/// r = 1/2 exactly when m and n have equal parity, which makes every entry
/// an integer. rho(1,1) = (0|0).
ShiftedWeight rho(int m, int n);

/// Unshifted highest weight with respect to the given base, derived from
/// lambda = w - rho(m,n): subtracts every b_sigma root whose CTD bit is
/// clear.
ShiftedWeight weight_for_base(const ShiftedWeight& w, const BaseWord& word);
/// Same, with the unshifted weight supplied by the caller.
ShiftedWeight weight_for_base(const ShiftedWeight& w,
                              const ShiftedWeight& lambda,
                              const BaseWord& word);

/// Diagram with respect to the anti-distinguished base: every cross moved
/// to the end of its cap, markers untouched.
WeightDiagram anti_distinguished_diagram(const ShiftedWeight& w);

/// Transported weights along e^i d^n e^(m-i) for i = m..0; m+1 entries,
/// starting at w itself. Consecutive entries differ by one cross moving
/// from a_(i+1) to k_(i+1) (or not at all).
std::vector<ShiftedWeight> distinguished_to_anti_walk(const ShiftedWeight& w);

/// One atom: a contiguous run of positive indices whose arrows tile the
/// segment, plus every delta index landing inside it.
struct Atom {
  std::vector<int> pos;  // ascending, 1-based eps indices
  std::vector<int> neg;  // ascending, 1-based delta indices
  Segment segment;
  bool operator==(const Atom&) const = default;
};

/// Atoms in bijection with intervals(w), ordered left to right by segment.
std::vector<Atom> atom_index_sets(const ShiftedWeight& w);

/// Sub-weight over the atom's coordinates. Throws Errc::invalid_atom when
/// the argument is not one of atom_index_sets(w).
ShiftedWeight atom_weight(const ShiftedWeight& w, const Atom& atom);

}  // namespace wdc
