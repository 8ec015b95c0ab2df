#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "wdc/core.hpp"
#include "wdc/ctd.hpp"

// Brute-force reference implementations. These deliberately avoid the
// closed-form code paths: transport is done by literally folding single
// reflections, the CTD by probing one base per root, the longtail by
// maximizing over every base. Only the primitive types and single-step
// operations are shared with the main modules.
namespace wdc {

/// Transport by folding reflect_shifted_weight over reflection_sequence.
ShiftedWeight oracle_shifted_weight(const ShiftedWeight& w,
                                    const BaseWord& word);

/// A uniformly random valid ordering of b_sigma(word): repeatedly applies
/// a random reflection that is currently simple.
std::vector<RightOddRoot> random_valid_order(const BaseWord& word,
                                             std::mt19937& rng);

/// Transport along an explicit reflection order (validity is enforced by
/// replaying the base alongside).
ShiftedWeight oracle_transport_along(const ShiftedWeight& w,
                                     const std::vector<RightOddRoot>& order);

/// bit(i,j) probed by transporting to one base containing (i,j) and
/// testing orthogonality there.
Ctd oracle_ctd(const ShiftedWeight& w);

/// Direct maximization of s over every transported weight. Throws
/// Errc::enumeration_too_large past C(24,12) bases.
int oracle_longtail(const ShiftedWeight& w);

/// Exhaustive search for the largest incomparable starred subset. Throws
/// Errc::too_many_stars past 20 stars.
int oracle_s_value(const ShiftedWeight& w);

struct OracleReport {
  long long checked = 0;
  struct Mismatch {
    std::string what;
    std::string input;
    std::string expected;
    std::string got;
  };
  std::vector<Mismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
  std::string to_json() const;
};

/// Enumerates the canonical dominant weights of shape (m|n) with symbol
/// positions in [0, bound] and minimal position 0.
void for_each_canonical_dominant(
    int m, int n, int bound, const std::function<void(const ShiftedWeight&)>& fn);

/// Exhaustive sweep over canonical dominant weights and all their bases,
/// asserting closed-form/oracle agreement and the structural invariants.
/// Failures are recorded, not thrown.
OracleReport run_verification_suite(int m, int n, int bound);

}  // namespace wdc
