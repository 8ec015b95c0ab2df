#include "wdc/diagrams.hpp"

#include <algorithm>
#include <set>

namespace wdc {

WeightDiagram weight_diagram(const ShiftedWeight& w) {
  std::map<int, std::pair<int, int>> counts;  // position -> (k, s)
  for (int v : w.a) counts[v].first++;
  for (int v : w.b) counts[-v].second++;
  WeightDiagram d;
  for (const auto& [p, ks] : counts) {
    Cell c;
    c.x = std::min(ks.first, ks.second);
    if (ks.first > ks.second)
      c.marker = Marker::gt;
    else if (ks.first < ks.second)
      c.marker = Marker::lt;
    d.cells[p] = c;
  }
  return d;
}

int atypicality(const ShiftedWeight& w) {
  int total = 0;
  for (const auto& [p, c] : weight_diagram(w).cells) total += c.x;
  return total;
}

ArrowDiagram arrow_diagram(const ShiftedWeight& w) {
  require_dominant(w);
  const int m = w.m();
  std::vector<int> dpos(w.b.size());
  for (size_t j = 0; j < w.b.size(); ++j) dpos[j] = -w.b[j];
  std::sort(dpos.begin(), dpos.end());
  std::set<int> used;
  ArrowDiagram out;
  out.start = w.a;
  out.k.assign(static_cast<size_t>(m), 0);
  out.M.assign(static_cast<size_t>(m), 0);
  for (int i = m; i >= 1; --i) {
    int c = w.eps(i);
    while (std::binary_search(dpos.begin(), dpos.end(), c) || used.count(c))
      ++c;
    used.insert(c);
    out.k[static_cast<size_t>(i) - 1] = c;
    out.M[static_cast<size_t>(i) - 1] = static_cast<int>(
        std::lower_bound(dpos.begin(), dpos.end(), c) - dpos.begin());
  }
  return out;
}

DualArrowDiagram dual_arrow_diagram(const ShiftedWeight& w) {
  require_dominant(w);
  const int n = w.n();
  std::vector<int> epos = w.a;
  std::sort(epos.begin(), epos.end());
  std::set<int> used;
  DualArrowDiagram out;
  out.start.assign(static_cast<size_t>(n), 0);
  out.l.assign(static_cast<size_t>(n), 0);
  out.N.assign(static_cast<size_t>(n), 0);
  for (int j = n; j >= 1; --j) {
    int c = w.delta_pos(j);
    out.start[static_cast<size_t>(j) - 1] = c;
    while (std::binary_search(epos.begin(), epos.end(), c) || used.count(c))
      --c;
    used.insert(c);
    out.l[static_cast<size_t>(j) - 1] = c;
    out.N[static_cast<size_t>(j) - 1] = static_cast<int>(
        std::lower_bound(epos.begin(), epos.end(), w.delta_pos(j)) -
        epos.begin());
  }
  return out;
}

CapDiagram cap_diagram(const ShiftedWeight& w) {
  require_dominant(w);
  WeightDiagram d = weight_diagram(w);
  std::vector<int> xs;
  for (const auto& [p, c] : d.cells)
    if (c.x > 0) xs.push_back(p);
  CapDiagram out;
  out.caps.assign(xs.size(), Cap{});
  std::set<int> ends;
  for (size_t s = xs.size(); s-- > 0;) {
    int c = xs[s] + 1;
    while (!d.empty_at(c) || ends.count(c)) ++c;
    ends.insert(c);
    out.caps[s] = Cap{xs[s], c};
  }
  return out;
}

std::vector<CrossCircSequence> cross_circ_sequences(const ShiftedWeight& w) {
  ArrowDiagram ad = arrow_diagram(w);
  WeightDiagram d = weight_diagram(w);
  std::map<int, int> row_at;  // eps position -> row index
  for (int i = 1; i <= w.m(); ++i) row_at[w.eps(i)] = i;
  std::vector<CrossCircSequence> out;
  for (const auto& [p, c] : d.cells) {
    if (c.x == 0) continue;
    CrossCircSequence seq;
    seq.start = p;
    int i = row_at.at(p);
    for (;;) {
      seq.rows.push_back(i);
      int e = ad.k[static_cast<size_t>(i) - 1];
      if (d.empty_at(e)) {
        seq.end = e;
        break;
      }
      i = row_at.at(e);  // endpoint carries '>', the row starting there
    }
    out.push_back(std::move(seq));
  }
  return out;
}

std::vector<Segment> intervals(const ShiftedWeight& w) {
  std::vector<Segment> segs;
  for (const auto& s : cross_circ_sequences(w)) segs.push_back({s.start, s.end});
  std::sort(segs.begin(), segs.end());
  std::vector<Segment> out;
  for (const auto& s : segs) {
    if (!out.empty() && s.lo <= out.back().hi)
      out.back().hi = std::max(out.back().hi, s.hi);
    else
      out.push_back(s);
  }
  return out;
}

}  // namespace wdc
