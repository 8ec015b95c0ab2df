#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Core combinatorial objects for gl(m|n): rho-shifted integer weights,
// right odd roots with their grid partial order, bases encoded as words
// over {e,d}, and odd reflections acting on both.
namespace wdc {

enum class Errc {
  parse,
  not_dominant,
  not_incomparable,
  root_not_simple,
  not_iso_set,
  not_dagger,
  invalid_atom,
  dimension_mismatch,
  enumeration_too_large,
  too_many_stars,
};

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

/// A rho-shifted integer weight: eps-coordinates a_1..a_m and
/// delta-coordinates b_1..b_n. The j-th delta symbol sits at position -b_j
/// on the number line; eps symbols sit at the a_i directly.
struct ShiftedWeight {
  std::vector<int> a;
  std::vector<int> b;

  int m() const { return static_cast<int>(a.size()); }
  int n() const { return static_cast<int>(b.size()); }

  /// 1-based accessors matching the usual indexing conventions.
  int eps(int i) const { return a[static_cast<size_t>(i) - 1]; }
  int delta_coord(int j) const { return b[static_cast<size_t>(j) - 1]; }
  /// Position of the j-th delta symbol on the number line.
  int delta_pos(int j) const { return -b[static_cast<size_t>(j) - 1]; }

  bool operator==(const ShiftedWeight&) const = default;
  auto operator<=>(const ShiftedWeight&) const = default;

  /// Text form "a1 a2 ... | b1 b2 ...". Accepts commas as separators too.
  static ShiftedWeight parse(std::string_view text);
  std::string str() const;
};

/// True iff both coordinate sequences are strictly decreasing.
bool validate_dominant(const ShiftedWeight& w);
/// Throws Errc::not_dominant naming the offending coordinate.
void require_dominant(const ShiftedWeight& w);

/// The right odd root eps_i - delta_j, 1 <= i <= m, 1 <= j <= n.
/// Order: (i,j) <= (i',j') iff i >= i' and j <= j'.
struct RightOddRoot {
  int i = 0;
  int j = 0;
  bool operator==(const RightOddRoot&) const = default;
  auto operator<=>(const RightOddRoot&) const = default;
};

inline bool root_leq(RightOddRoot x, RightOddRoot y) {
  return x.i >= y.i && x.j <= y.j;
}
inline bool roots_incomparable(RightOddRoot x, RightOddRoot y) {
  return !root_leq(x, y) && !root_leq(y, x);
}

/// sign +1 stands for eps_i - delta_j, sign -1 for delta_j - eps_i.
struct SignedOddRoot {
  RightOddRoot root;
  int sign = +1;
  bool operator==(const SignedOddRoot&) const = default;
};

/// A base reachable from the distinguished one by right-odd reflections,
/// encoded as a word over {e,d} with m 'e's and n 'd's. Letters are
/// numbered positionally left to right.
struct BaseWord {
  std::string letters;  // characters 'e' and 'd' only

  int m() const;
  int n() const;

  static BaseWord distinguished(int m, int n);
  static BaseWord anti_distinguished(int m, int n);
  static BaseWord parse(std::string_view text);
  const std::string& str() const { return letters; }

  bool operator==(const BaseWord&) const = default;
  auto operator<=>(const BaseWord&) const = default;

  /// Number of 'd' letters to the left of the i-th 'e' (the inversion
  /// profile; non-decreasing in i).
  std::vector<int> eps_inversions() const;
  /// Number of 'e' letters to the right of the j-th 'd'.
  std::vector<int> delta_inversions() const;
};

/// A pairwise incomparable set of right odd roots, kept sorted by (i,j).
struct IncomparableSet {
  std::vector<RightOddRoot> roots;

  static IncomparableSet parse(std::string_view text);  // "i:j,i:j,..."
  std::string str() const;
  bool operator==(const IncomparableSet&) const = default;
};

/// The adjacent e_i d_j pairs of the word; always incomparable.
IncomparableSet incomparable_set_of_base(const BaseWord& w);

/// Inverse of the above. Throws Errc::not_incomparable on a comparable
/// pair or an out-of-range index.
BaseWord base_from_incomparable_set(const IncomparableSet& s, int m, int n);

/// The set of right odd roots reflected through on any valid path from the
/// distinguished base: all (i,j) with d_j left of e_i in the word.
/// Equivalently the complement of the upward closure of the word's
/// incomparable set. Sorted by (i,j).
std::vector<RightOddRoot> b_sigma(const BaseWord& w);

/// A valid reflection order realizing b_sigma: column-major, each column
/// bottom row first. Folding reflect_base over it from the distinguished
/// word yields w, every step staying simple.
std::vector<RightOddRoot> reflection_sequence(const BaseWord& w);

/// Swap the adjacent pair named by the root. sign +1 expects e_i
/// immediately left of d_j; sign -1 the reverse. Throws
/// Errc::root_not_simple when the adjacency fails.
BaseWord reflect_base(const BaseWord& w, const SignedOddRoot& alpha);

/// Adds alpha exactly when the weight is orthogonal to it (a_i == -b_j);
/// otherwise returns the weight unchanged.
ShiftedWeight reflect_shifted_weight(const ShiftedWeight& w,
                                     const SignedOddRoot& alpha);

/// Lexicographic enumeration of all words with m 'e's and n 'd's, with
/// e < d. first_base_word gives e^m d^n; next_base_word steps to the
/// successor and returns false past the last word (d^n e^m).
BaseWord first_base_word(int m, int n);
bool next_base_word(BaseWord& w);
std::vector<BaseWord> all_base_words(int m, int n);
/// C(m+n, n); throws Errc::enumeration_too_large past 2^40.
std::uint64_t base_count(int m, int n);

/// Replaces every signed root by its +1 form. Input must be an iso-set:
/// no two elements sharing a row or a column, and no root together with
/// its negative. Throws Errc::not_iso_set otherwise. Result sorted; it
/// need not be incomparable.
std::vector<RightOddRoot> positive_normal_form(
    const std::vector<SignedOddRoot>& s);

}  // namespace wdc
