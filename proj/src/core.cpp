#include "wdc/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wdc {

namespace {

constexpr long long kCoordLimit = 1000000;

std::vector<int> parse_int_list(std::string_view part, const char* side) {
  std::vector<int> out;
  std::string token;
  std::istringstream in{std::string(part)};
  std::string normalized;
  normalized.reserve(part.size());
  for (char c : part) normalized.push_back(c == ',' ? ' ' : c);
  std::istringstream nin(normalized);
  while (nin >> token) {
    size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &pos);
    } catch (const std::exception&) {
      throw Error(Errc::parse, std::string("bad ") + side + " coordinate '" +
                                   token + "'");
    }
    if (pos != token.size())
      throw Error(Errc::parse, std::string("bad ") + side + " coordinate '" +
                                   token + "'");
    if (v < -kCoordLimit || v > kCoordLimit)
      throw Error(Errc::parse, std::string(side) + " coordinate " + token +
                                   " out of supported range");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace

ShiftedWeight ShiftedWeight::parse(std::string_view text) {
  size_t bar = text.find('|');
  if (bar == std::string_view::npos)
    throw Error(Errc::parse, "weight text must contain '|'");
  if (text.find('|', bar + 1) != std::string_view::npos)
    throw Error(Errc::parse, "weight text must contain a single '|'");
  ShiftedWeight w;
  w.a = parse_int_list(text.substr(0, bar), "eps");
  w.b = parse_int_list(text.substr(bar + 1), "delta");
  return w;
}

std::string ShiftedWeight::str() const {
  std::ostringstream out;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) out << ' ';
    out << a[i];
  }
  out << (a.empty() ? "|" : " |");
  for (size_t j = 0; j < b.size(); ++j) out << ' ' << b[j];
  return out.str();
}

bool validate_dominant(const ShiftedWeight& w) {
  for (size_t i = 1; i < w.a.size(); ++i)
    if (w.a[i - 1] <= w.a[i]) return false;
  for (size_t j = 1; j < w.b.size(); ++j)
    if (w.b[j - 1] <= w.b[j]) return false;
  return true;
}

void require_dominant(const ShiftedWeight& w) {
  for (size_t i = 1; i < w.a.size(); ++i)
    if (w.a[i - 1] <= w.a[i]) {
      std::ostringstream msg;
      msg << "weight not dominant: eps coordinate " << i + 1 << " ("
          << w.a[i] << ") is not below coordinate " << i << " (" << w.a[i - 1]
          << ")";
      throw Error(Errc::not_dominant, msg.str());
    }
  for (size_t j = 1; j < w.b.size(); ++j)
    if (w.b[j - 1] <= w.b[j]) {
      std::ostringstream msg;
      msg << "weight not dominant: delta coordinate " << j + 1 << " ("
          << w.b[j] << ") is not below coordinate " << j << " (" << w.b[j - 1]
          << ")";
      throw Error(Errc::not_dominant, msg.str());
    }
}

int BaseWord::m() const {
  return static_cast<int>(std::count(letters.begin(), letters.end(), 'e'));
}

int BaseWord::n() const {
  return static_cast<int>(std::count(letters.begin(), letters.end(), 'd'));
}

BaseWord BaseWord::distinguished(int m, int n) {
  BaseWord w;
  w.letters = std::string(static_cast<size_t>(m), 'e') +
              std::string(static_cast<size_t>(n), 'd');
  return w;
}

BaseWord BaseWord::anti_distinguished(int m, int n) {
  BaseWord w;
  w.letters = std::string(static_cast<size_t>(n), 'd') +
              std::string(static_cast<size_t>(m), 'e');
  return w;
}

BaseWord BaseWord::parse(std::string_view text) {
  BaseWord w;
  for (size_t k = 0; k < text.size(); ++k) {
    char c = text[k];
    if (c != 'e' && c != 'd')
      throw Error(Errc::parse, "bad letter '" + std::string(1, c) +
                                   "' at index " + std::to_string(k) +
                                   " of base word (expected 'e' or 'd')");
    w.letters.push_back(c);
  }
  return w;
}

std::vector<int> BaseWord::eps_inversions() const {
  std::vector<int> e;
  int d_seen = 0;
  for (char c : letters) {
    if (c == 'd')
      ++d_seen;
    else
      e.push_back(d_seen);
  }
  return e;
}

std::vector<int> BaseWord::delta_inversions() const {
  std::vector<int> d;
  int e_right = m();
  for (char c : letters) {
    if (c == 'e')
      --e_right;
    else
      d.push_back(e_right);
  }
  return d;
}

IncomparableSet IncomparableSet::parse(std::string_view text) {
  IncomparableSet s;
  std::string normalized;
  for (char c : text) normalized.push_back(c == ',' ? ' ' : c);
  std::istringstream in(normalized);
  std::string token;
  while (in >> token) {
    size_t colon = token.find(':');
    if (colon == std::string::npos)
      throw Error(Errc::parse, "bad root '" + token + "' (expected i:j)");
    try {
      int i = std::stoi(token.substr(0, colon));
      int j = std::stoi(token.substr(colon + 1));
      s.roots.push_back({i, j});
    } catch (const std::exception&) {
      throw Error(Errc::parse, "bad root '" + token + "' (expected i:j)");
    }
  }
  std::sort(s.roots.begin(), s.roots.end());
  return s;
}

std::string IncomparableSet::str() const {
  std::ostringstream out;
  for (size_t k = 0; k < roots.size(); ++k) {
    if (k) out << ',';
    out << roots[k].i << ':' << roots[k].j;
  }
  return out.str();
}

IncomparableSet incomparable_set_of_base(const BaseWord& w) {
  IncomparableSet s;
  int i = 0, j = 0;
  const std::string& t = w.letters;
  for (size_t k = 0; k + 1 < t.size(); ++k) {
    if (t[k] == 'e') {
      ++i;
      if (t[k + 1] == 'd') s.roots.push_back({i, j + 1});
    } else {
      ++j;
    }
  }
  return s;
}

BaseWord base_from_incomparable_set(const IncomparableSet& s, int m, int n) {
  std::vector<RightOddRoot> roots = s.roots;
  std::sort(roots.begin(), roots.end());
  for (const auto& r : roots)
    if (r.i < 1 || r.i > m || r.j < 1 || r.j > n)
      throw Error(Errc::not_incomparable,
                  "root " + std::to_string(r.i) + ":" + std::to_string(r.j) +
                      " out of range for gl(" + std::to_string(m) + "|" +
                      std::to_string(n) + ")");
  for (size_t k = 1; k < roots.size(); ++k)
    if (roots[k - 1].i >= roots[k].i || roots[k - 1].j >= roots[k].j)
      throw Error(Errc::not_incomparable,
                  "roots " + std::to_string(roots[k - 1].i) + ":" +
                      std::to_string(roots[k - 1].j) + " and " +
                      std::to_string(roots[k].i) + ":" +
                      std::to_string(roots[k].j) + " are comparable");
  // e(i) = number of d's left of e_i = min{ j_l - 1 : i_l >= i }, or n.
  std::vector<int> e(static_cast<size_t>(m), n);
  for (int i = 1; i <= m; ++i) {
    auto it = std::lower_bound(roots.begin(), roots.end(), RightOddRoot{i, 0});
    if (it != roots.end()) e[static_cast<size_t>(i) - 1] = it->j - 1;
  }
  BaseWord w;
  int placed_d = 0;
  for (int i = 1; i <= m; ++i) {
    for (; placed_d < e[static_cast<size_t>(i) - 1]; ++placed_d)
      w.letters.push_back('d');
    w.letters.push_back('e');
  }
  for (; placed_d < n; ++placed_d) w.letters.push_back('d');
  return w;
}

std::vector<RightOddRoot> b_sigma(const BaseWord& w) {
  std::vector<RightOddRoot> out;
  std::vector<int> e = w.eps_inversions();
  for (int i = 1; i <= w.m(); ++i)
    for (int j = 1; j <= e[static_cast<size_t>(i) - 1]; ++j)
      out.push_back({i, j});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RightOddRoot> reflection_sequence(const BaseWord& w) {
  std::vector<RightOddRoot> seq;
  const int m = w.m();
  std::vector<int> eps_left;  // e's left of the j-th d
  int e_seen = 0;
  for (char c : w.letters) {
    if (c == 'e')
      ++e_seen;
    else
      eps_left.push_back(e_seen);
  }
  for (size_t j = 0; j < eps_left.size(); ++j)
    for (int i = m; i > eps_left[j]; --i)
      seq.push_back({i, static_cast<int>(j) + 1});
  return seq;
}

BaseWord reflect_base(const BaseWord& w, const SignedOddRoot& alpha) {
  const char first = alpha.sign > 0 ? 'e' : 'd';
  const int first_no = alpha.sign > 0 ? alpha.root.i : alpha.root.j;
  const char second = alpha.sign > 0 ? 'd' : 'e';
  const int second_no = alpha.sign > 0 ? alpha.root.j : alpha.root.i;
  int count = 0;
  for (size_t k = 0; k < w.letters.size(); ++k) {
    if (w.letters[k] != first) continue;
    if (++count != first_no) continue;
    // found the letter; its right neighbour must be the partner
    int partner_no = 0;
    for (size_t t = 0; t <= k; ++t)
      if (w.letters[t] == second) ++partner_no;
    if (k + 1 < w.letters.size() && w.letters[k + 1] == second &&
        partner_no + 1 == second_no) {
      BaseWord out = w;
      std::swap(out.letters[k], out.letters[k + 1]);
      return out;
    }
    std::ostringstream msg;
    msg << "root " << (alpha.sign > 0 ? "+" : "-") << alpha.root.i << ":"
        << alpha.root.j << " is not simple in word '" << w.letters
        << "' (letter index " << k << ")";
    throw Error(Errc::root_not_simple, msg.str());
  }
  throw Error(Errc::root_not_simple,
              "word '" + w.letters + "' has no letter " +
                  std::string(1, first) + std::to_string(first_no));
}

ShiftedWeight reflect_shifted_weight(const ShiftedWeight& w,
                                     const SignedOddRoot& alpha) {
  const int i = alpha.root.i, j = alpha.root.j;
  if (i < 1 || i > w.m() || j < 1 || j > w.n())
    throw Error(Errc::parse, "root index " + std::to_string(i) + ":" +
                                 std::to_string(j) + " out of range");
  if (w.eps(i) != -w.delta_coord(j)) return w;
  ShiftedWeight out = w;
  out.a[static_cast<size_t>(i) - 1] += alpha.sign;
  out.b[static_cast<size_t>(j) - 1] -= alpha.sign;
  return out;
}

BaseWord first_base_word(int m, int n) { return BaseWord::distinguished(m, n); }

bool next_base_word(BaseWord& w) {
  // lexicographic with e < d, i.e. next permutation of a 0/1 string
  std::string& t = w.letters;
  auto rank = [](char c) { return c == 'e' ? 0 : 1; };
  return std::next_permutation(
      t.begin(), t.end(), [&](char x, char y) { return rank(x) < rank(y); });
}

std::vector<BaseWord> all_base_words(int m, int n) {
  std::vector<BaseWord> out;
  out.reserve(static_cast<size_t>(base_count(m, n)));
  BaseWord w = first_base_word(m, n);
  do {
    out.push_back(w);
  } while (next_base_word(w));
  return out;
}

std::uint64_t base_count(int m, int n) {
  std::uint64_t c = 1;
  const std::uint64_t limit = 1ull << 40;
  int k = std::min(m, n);
  for (int t = 1; t <= k; ++t) {
    c = c * static_cast<std::uint64_t>(m + n - k + t) /
        static_cast<std::uint64_t>(t);
    if (c > limit)
      throw Error(Errc::enumeration_too_large,
                  "C(" + std::to_string(m + n) + "," + std::to_string(n) +
                      ") exceeds the enumeration guard");
  }
  return c;
}

std::vector<RightOddRoot> positive_normal_form(
    const std::vector<SignedOddRoot>& s) {
  std::vector<SignedOddRoot> uniq;
  for (const auto& x : s)
    if (std::find(uniq.begin(), uniq.end(), x) == uniq.end())
      uniq.push_back(x);
  for (size_t p = 0; p < uniq.size(); ++p)
    for (size_t q = p + 1; q < uniq.size(); ++q) {
      const auto &x = uniq[p], &y = uniq[q];
      const bool same_i = x.root.i == y.root.i;
      const bool same_j = x.root.j == y.root.j;
      if (same_i && same_j)
        throw Error(Errc::not_iso_set,
                    "set contains a root together with its negative at " +
                        std::to_string(x.root.i) + ":" +
                        std::to_string(x.root.j));
      if (same_i || same_j)
        throw Error(Errc::not_iso_set,
                    "roots " + std::to_string(x.root.i) + ":" +
                        std::to_string(x.root.j) + " and " +
                        std::to_string(y.root.i) + ":" +
                        std::to_string(y.root.j) + " are not orthogonal");
    }
  std::vector<RightOddRoot> out;
  out.reserve(uniq.size());
  for (const auto& x : uniq) out.push_back(x.root);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wdc
