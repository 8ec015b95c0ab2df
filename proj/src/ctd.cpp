#include "wdc/ctd.hpp"

#include <algorithm>

namespace wdc {

std::vector<RightOddRoot> Ctd::ones() const {
  std::vector<RightOddRoot> out;
  for (int i = 1; i <= m; ++i) {
    const auto& [lo, hi] = window[static_cast<size_t>(i) - 1];
    for (int j = lo; j <= hi; ++j) out.push_back({i, j});
  }
  return out;
}

Ctd ctd(const ShiftedWeight& w) {
  ArrowDiagram ad = arrow_diagram(w);
  Ctd out;
  out.m = w.m();
  out.n = w.n();
  out.window.assign(static_cast<size_t>(out.m), {1, 0});
  for (int i = 1; i <= out.m; ++i) {
    const int ki = ad.k[static_cast<size_t>(i) - 1];
    const int Mi = ad.M[static_cast<size_t>(i) - 1];
    if (ki == w.eps(i)) continue;
    out.window[static_cast<size_t>(i) - 1] = {Mi + 1 - (ki - w.eps(i)), Mi};
  }
  return out;
}

namespace {

void require_same_shape(const ShiftedWeight& w, const BaseWord& word) {
  if (word.m() != w.m() || word.n() != w.n())
    throw Error(Errc::dimension_mismatch,
                "base word has shape (" + std::to_string(word.m()) + "|" +
                    std::to_string(word.n()) + ") but the weight has shape (" +
                    std::to_string(w.m()) + "|" + std::to_string(w.n()) + ")");
}

}  // namespace

ShiftedWeight shifted_weight_for_base(const ShiftedWeight& w,
                                      const BaseWord& word) {
  require_same_shape(w, word);
  Ctd c = ctd(w);
  std::vector<int> e = word.eps_inversions();
  ShiftedWeight out = w;
  for (int i = 1; i <= w.m(); ++i) {
    const auto& [lo, hi] = c.window[static_cast<size_t>(i) - 1];
    const int jmax = std::min(hi, e[static_cast<size_t>(i) - 1]);
    for (int j = lo; j <= jmax; ++j) {
      out.a[static_cast<size_t>(i) - 1] += 1;
      out.b[static_cast<size_t>(j) - 1] -= 1;
    }
  }
  return out;
}

ShiftedWeight rho(int m, int n) {
  // half-sum vector, shifted by 1/2(1..1|-1..-1) when m and n have equal
  // parity so that every entry is an integer
  ShiftedWeight r;
  const bool odd = (m - n) % 2 != 0;
  const int ca = odd ? 1 : 2;
  const int cb = odd ? 1 : 0;
  for (int i = 1; i <= m; ++i) r.a.push_back((m - n + ca - 2 * i) / 2);
  for (int j = 1; j <= n; ++j) r.b.push_back((m + n + cb - 2 * j) / 2);
  return r;
}

ShiftedWeight weight_for_base(const ShiftedWeight& w, const BaseWord& word) {
  ShiftedWeight r = rho(w.m(), w.n());
  ShiftedWeight lambda;
  for (int i = 1; i <= w.m(); ++i) lambda.a.push_back(w.eps(i) - r.eps(i));
  for (int j = 1; j <= w.n(); ++j)
    lambda.b.push_back(w.delta_coord(j) - r.delta_coord(j));
  return weight_for_base(w, lambda, word);
}

ShiftedWeight weight_for_base(const ShiftedWeight& w,
                              const ShiftedWeight& lambda,
                              const BaseWord& word) {
  require_same_shape(w, word);
  if (lambda.m() != w.m() || lambda.n() != w.n())
    throw Error(Errc::dimension_mismatch,
                "unshifted weight shape does not match the shifted weight");
  Ctd c = ctd(w);
  std::vector<int> e = word.eps_inversions();
  ShiftedWeight out = lambda;
  for (int i = 1; i <= w.m(); ++i)
    for (int j = 1; j <= e[static_cast<size_t>(i) - 1]; ++j)
      if (!c.bit(i, j)) {
        out.a[static_cast<size_t>(i) - 1] -= 1;
        out.b[static_cast<size_t>(j) - 1] += 1;
      }
  return out;
}

WeightDiagram anti_distinguished_diagram(const ShiftedWeight& w) {
  CapDiagram caps = cap_diagram(w);
  WeightDiagram d = weight_diagram(w);
  for (const Cap& cap : caps.caps) {
    auto it = d.cells.find(cap.start);
    it->second.x -= 1;
    if (it->second.symbols() == 0) d.cells.erase(it);
    d.cells[cap.end].x += 1;
  }
  return d;
}

std::vector<ShiftedWeight> distinguished_to_anti_walk(const ShiftedWeight& w) {
  require_dominant(w);
  const int m = w.m(), n = w.n();
  std::vector<ShiftedWeight> out;
  out.reserve(static_cast<size_t>(m) + 1);
  for (int i = m; i >= 0; --i) {
    BaseWord word;
    word.letters = std::string(static_cast<size_t>(i), 'e') +
                   std::string(static_cast<size_t>(n), 'd') +
                   std::string(static_cast<size_t>(m - i), 'e');
    out.push_back(shifted_weight_for_base(w, word));
  }
  return out;
}

std::vector<Atom> atom_index_sets(const ShiftedWeight& w) {
  ArrowDiagram ad = arrow_diagram(w);
  std::vector<Atom> out;
  for (const Segment& seg : intervals(w)) {
    Atom atom;
    atom.segment = seg;
    for (int i = 1; i <= w.m(); ++i)
      if (seg.lo <= w.eps(i) && ad.k[static_cast<size_t>(i) - 1] <= seg.hi)
        atom.pos.push_back(i);
    for (int j = 1; j <= w.n(); ++j)
      if (seg.lo <= w.delta_pos(j) && w.delta_pos(j) <= seg.hi)
        atom.neg.push_back(j);
    out.push_back(std::move(atom));
  }
  return out;
}

ShiftedWeight atom_weight(const ShiftedWeight& w, const Atom& atom) {
  std::vector<Atom> atoms = atom_index_sets(w);
  if (std::find(atoms.begin(), atoms.end(), atom) == atoms.end())
    throw Error(Errc::invalid_atom,
                "the given index set is not an atom of this weight");
  ShiftedWeight out;
  for (int i : atom.pos) out.a.push_back(w.eps(i));
  for (int j : atom.neg) out.b.push_back(w.delta_coord(j));
  return out;
}

}  // namespace wdc
