#pragma once

#include <optional>
#include <vector>

#include "wdc/core.hpp"
#include "wdc/ctd.hpp"
#include "wdc/diagrams.hpp"

// Orthogonality masks, the s statistic, the three longtail formulas, the
// dagger space with its Phi/Psi bijection, tail, and the tail-gap search.
namespace wdc {

/// star(i,j) = 1 iff the weight is orthogonal to eps_i - delta_j, that is
/// a_i == -b_j. Stars kept sorted by (i,j).
struct OrthogonalityMask {
  int m = 0;
  int n = 0;
  std::vector<RightOddRoot> stars;
  bool star(int i, int j) const;
};

OrthogonalityMask orthogonality_mask(const ShiftedWeight& w);

/// Size of the largest incomparable starred set: the longest chain of
/// starred cells strictly increasing in both indices.
int s_value(const ShiftedWeight& w);

/// All transported shifted weights over every base, deduplicated and
/// sorted. Enumerates C(m+n,n) bases.
std::vector<ShiftedWeight> hwt(const ShiftedWeight& w);

/// The three equivalent closed forms for the longtail.
int longtail_via_ctd(const ShiftedWeight& w);    // longest 1-bit chain
int longtail_via_arrows(const ShiftedWeight& w); // max arrows over a point
int longtail_via_caps(const ShiftedWeight& w);   // max caps over a point

/// Diagram with at most one multi-symbol position, which must be a stack
/// of k >= 2 crosses with no cross to its left, and with an empty position
/// strictly between the two leftmost cross positions (vacuous with fewer
/// than two cross positions).
bool is_dagger_diagram(const WeightDiagram& d);

struct DaggerDiagram {
  WeightDiagram diagram;
  /// (position, multiplicity) of the stack; absent when no position holds
  /// more than one cross.
  std::optional<std::pair<int, int>> stack;
  bool operator==(const DaggerDiagram&) const = default;
};

/// Views a plain diagram as a dagger diagram, locating the stack. Throws
/// Errc::not_dagger if the conditions fail.
DaggerDiagram dagger_from_diagram(const WeightDiagram& d);

/// Collapses the leading cross run: crosses between the leftmost cross and
/// the first empty position to its right pile onto the rightmost of them.
DaggerDiagram phi(const ShiftedWeight& w);

/// Inverse of phi: spreads a stack of k crosses onto the k-1 nearest empty
/// positions to its left, then reads the weight off the diagram.
ShiftedWeight psi(const DaggerDiagram& d);

/// The base transporting w onto phi(w)'s diagram.
BaseWord sigma_lambda(const ShiftedWeight& w);

/// s of the transported weight shifted_weight_for_base(w, sigma_lambda(w)).
int tail(const ShiftedWeight& w);

/// A base whose transported diagram stacks longtail(w) crosses in one
/// position.
BaseWord longtail_witness_base(const ShiftedWeight& w);

struct GapWitness {
  ShiftedWeight weight;
  int tail_value = 0;
  int longtail_value = 0;
  BaseWord sigma;
  BaseWord witness_base;
};

/// Sweeps dominant weights with positions in [0, 2*bound] canonicalized so
/// the minimal position is 0 (every weight with coordinates in
/// [-bound, bound] has exactly one such translate) and returns the weights
/// with longtail > tail, sorted by coordinates. Deterministic for any job
/// count.
std::vector<GapWitness> search_tail_gap(int m, int n, int bound,
                                        int jobs = 1);

}  // namespace wdc
