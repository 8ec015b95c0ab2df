#include "wdc/tails.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>
#include <tuple>

namespace wdc {

namespace {

/// Longest chain strictly increasing in both coordinates among cells
/// already sorted by (i,j).
int longest_increasing_chain(const std::vector<RightOddRoot>& cells) {
  std::vector<int> len(cells.size(), 1);
  int best = 0;
  for (size_t t = 0; t < cells.size(); ++t) {
    for (size_t s = 0; s < t; ++s)
      if (cells[s].i < cells[t].i && cells[s].j < cells[t].j)
        len[t] = std::max(len[t], len[s] + 1);
    best = std::max(best, len[t]);
  }
  return best;
}

}  // namespace

bool OrthogonalityMask::star(int i, int j) const {
  return std::binary_search(stars.begin(), stars.end(), RightOddRoot{i, j});
}

OrthogonalityMask orthogonality_mask(const ShiftedWeight& w) {
  OrthogonalityMask mask;
  mask.m = w.m();
  mask.n = w.n();
  for (int i = 1; i <= w.m(); ++i)
    for (int j = 1; j <= w.n(); ++j)
      if (w.eps(i) == w.delta_pos(j)) mask.stars.push_back({i, j});
  return mask;
}

int s_value(const ShiftedWeight& w) {
  return longest_increasing_chain(orthogonality_mask(w).stars);
}

std::vector<ShiftedWeight> hwt(const ShiftedWeight& w) {
  require_dominant(w);
  base_count(w.m(), w.n());  // enumeration guard
  std::set<ShiftedWeight> seen;
  BaseWord word = first_base_word(w.m(), w.n());
  do {
    seen.insert(shifted_weight_for_base(w, word));
  } while (next_base_word(word));
  return {seen.begin(), seen.end()};
}

int longtail_via_ctd(const ShiftedWeight& w) {
  return longest_increasing_chain(ctd(w).ones());
}

int longtail_via_arrows(const ShiftedWeight& w) {
  ArrowDiagram ad = arrow_diagram(w);
  int best = 0;
  for (int r : ad.start) {
    int over = 0;
    for (int i = 0; i < w.m(); ++i)
      if (ad.start[static_cast<size_t>(i)] <= r &&
          r < ad.k[static_cast<size_t>(i)])
        ++over;
    best = std::max(best, over);
  }
  return best;
}

int longtail_via_caps(const ShiftedWeight& w) {
  CapDiagram cd = cap_diagram(w);
  int best = 0;
  for (const Cap& c : cd.caps) {
    int over = 0;
    for (const Cap& other : cd.caps)
      if (other.start <= c.start && c.start < other.end) ++over;
    best = std::max(best, over);
  }
  return best;
}

bool is_dagger_diagram(const WeightDiagram& d) {
  std::vector<int> multi;
  std::vector<int> cross_positions;
  for (const auto& [p, c] : d.cells) {
    if (c.symbols() > 1) multi.push_back(p);
    if (c.x > 0) cross_positions.push_back(p);
  }
  if (multi.size() > 1) return false;
  if (multi.size() == 1) {
    const Cell c = d.at(multi[0]);
    if (c.marker != Marker::none || c.x < 2) return false;
    if (!cross_positions.empty() && cross_positions.front() < multi[0])
      return false;
  }
  if (cross_positions.size() >= 2) {
    bool found = false;
    for (int q = cross_positions[0] + 1; q < cross_positions[1]; ++q)
      if (d.empty_at(q)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

DaggerDiagram dagger_from_diagram(const WeightDiagram& d) {
  if (!is_dagger_diagram(d))
    throw Error(Errc::not_dagger, "diagram violates the dagger conditions");
  DaggerDiagram out;
  out.diagram = d;
  for (const auto& [p, c] : d.cells)
    if (c.x >= 2) out.stack = {p, c.x};
  return out;
}

namespace {

struct DaggerZone {
  int x1 = 0;      // leftmost cross
  int d = 0;       // first empty position right of x1
  int s = 0;       // crosses in [x1, d)
  int x_dag = 0;   // rightmost cross in [x1, d)
};

std::optional<DaggerZone> dagger_zone(const WeightDiagram& dist) {
  std::vector<int> xs;
  for (const auto& [p, c] : dist.cells)
    if (c.x > 0) xs.push_back(p);
  if (xs.empty()) return std::nullopt;
  DaggerZone z;
  z.x1 = xs.front();
  z.d = z.x1 + 1;
  while (!dist.empty_at(z.d)) ++z.d;
  for (int p : xs)
    if (p < z.d) {
      ++z.s;
      z.x_dag = p;
    }
  return z;
}

}  // namespace

DaggerDiagram phi(const ShiftedWeight& w) {
  require_dominant(w);
  WeightDiagram dist = weight_diagram(w);
  DaggerDiagram out;
  auto zone = dagger_zone(dist);
  if (!zone) {
    out.diagram = dist;
    return out;
  }
  WeightDiagram moved = dist;
  for (int p = zone->x1; p < zone->d; ++p) {
    if (moved.at(p).x == 0 || p == zone->x_dag) continue;
    auto it = moved.cells.find(p);
    it->second.x = 0;
    if (it->second.symbols() == 0) moved.cells.erase(it);
  }
  moved.cells[zone->x_dag].x = zone->s;
  out.diagram = std::move(moved);
  if (zone->s >= 2) out.stack = {zone->x_dag, zone->s};
  return out;
}

ShiftedWeight psi(const DaggerDiagram& d) {
  if (!is_dagger_diagram(d.diagram))
    throw Error(Errc::not_dagger, "diagram violates the dagger conditions");
  WeightDiagram spread = d.diagram;
  if (d.stack) {
    const auto [p, count] = *d.stack;
    if (spread.at(p).x != count)
      throw Error(Errc::not_dagger, "stack annotation does not match diagram");
    spread.cells[p].x = 1;
    int placed = 0;
    for (int q = p - 1; placed < count - 1; --q)
      if (spread.empty_at(q)) {
        spread.cells[q].x = 1;
        ++placed;
      }
  }
  ShiftedWeight out;
  for (auto it = spread.cells.rbegin(); it != spread.cells.rend(); ++it) {
    const auto& [p, c] = *it;
    if (c.x > 0 || c.marker == Marker::gt) out.a.push_back(p);
  }
  for (const auto& [p, c] : spread.cells)
    if (c.x > 0 || c.marker == Marker::lt) out.b.push_back(-p);
  return out;
}

BaseWord sigma_lambda(const ShiftedWeight& w) {
  require_dominant(w);
  const int m = w.m(), n = w.n();
  WeightDiagram dist = weight_diagram(w);
  auto zone = dagger_zone(dist);
  if (!zone || zone->s < 2) return BaseWord::distinguished(m, n);
  ArrowDiagram ad = arrow_diagram(w);
  std::vector<int> e(static_cast<size_t>(m), 0);
  for (int i = 1; i <= m; ++i) {
    const int ai = w.eps(i);
    const int ki = ad.k[static_cast<size_t>(i) - 1];
    const int Mi = ad.M[static_cast<size_t>(i) - 1];
    if (ai <= zone->x_dag && zone->x_dag < ki)
      e[static_cast<size_t>(i) - 1] = Mi + zone->x_dag - ki;
    else if (zone->x1 <= ai && ai < zone->x_dag && ki < zone->x_dag)
      e[static_cast<size_t>(i) - 1] = n;
  }
  // rows fully left of the zone carry empty change windows; padding them to
  // keep the inversion profile monotone leaves the transported weight intact
  for (int i = 2; i <= m; ++i)
    e[static_cast<size_t>(i) - 1] = std::max(e[static_cast<size_t>(i) - 1],
                                             e[static_cast<size_t>(i) - 2]);
  BaseWord word;
  int placed_d = 0;
  for (int i = 1; i <= m; ++i) {
    for (; placed_d < e[static_cast<size_t>(i) - 1]; ++placed_d)
      word.letters.push_back('d');
    word.letters.push_back('e');
  }
  for (; placed_d < n; ++placed_d) word.letters.push_back('d');
  return word;
}

int tail(const ShiftedWeight& w) {
  return s_value(shifted_weight_for_base(w, sigma_lambda(w)));
}

BaseWord longtail_witness_base(const ShiftedWeight& w) {
  ArrowDiagram ad = arrow_diagram(w);
  const int m = w.m(), n = w.n();
  auto rows_over = [&](int r) {
    std::vector<int> rows;
    for (int i = 1; i <= m; ++i)
      if (w.eps(i) <= r && r < ad.k[static_cast<size_t>(i) - 1])
        rows.push_back(i);
    return rows;
  };
  int best_r = 0;
  size_t best = 0;
  for (int r : ad.start) {
    size_t over = rows_over(r).size();
    if (over > best) {
      best = over;
      best_r = r;
    }
  }
  if (best == 0) return BaseWord::distinguished(m, n);
  // move the reference point to the largest arrow start over best_r; every
  // arrow over best_r is still over it
  const int p = w.eps(rows_over(best_r).front());
  IncomparableSet s;
  for (int i : rows_over(p)) {
    const int mi =
        ad.M[static_cast<size_t>(i) - 1] + 1 -
        (ad.k[static_cast<size_t>(i) - 1] - p);
    s.roots.push_back({i, mi});
  }
  return base_from_incomparable_set(s, m, n);
}

namespace {

/// All strictly decreasing k-tuples with values in [0, hi].
std::vector<std::vector<int>> desc_tuples(int k, int hi) {
  std::vector<std::vector<int>> out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  if (hi + 1 < k) return out;
  std::vector<int> idx(static_cast<size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    out.emplace_back(idx.rbegin(), idx.rend());
    int r = k - 1;
    while (r >= 0 && idx[static_cast<size_t>(r)] == hi - (k - 1 - r)) --r;
    if (r < 0) break;
    ++idx[static_cast<size_t>(r)];
    for (int t = r + 1; t < k; ++t)
      idx[static_cast<size_t>(t)] = idx[static_cast<size_t>(t - 1)] + 1;
  }
  return out;
}

}  // namespace

std::vector<GapWitness> search_tail_gap(int m, int n, int bound, int jobs) {
  if (m < 1 || n < 1 || bound < 1)
    throw Error(Errc::parse, "search requires m, n, bound >= 1");
  const int hi = 2 * bound;
  std::vector<std::vector<int>> eps_tuples = desc_tuples(m, hi);
  std::vector<std::vector<int>> delta_tuples = desc_tuples(n, hi);

  jobs = std::max(1, jobs);
  std::vector<std::vector<GapWitness>> found(static_cast<size_t>(jobs));
  auto worker = [&](int part) {
    for (size_t ai = static_cast<size_t>(part); ai < eps_tuples.size();
         ai += static_cast<size_t>(jobs)) {
      const std::vector<int>& a = eps_tuples[ai];
      for (const std::vector<int>& dpos : delta_tuples) {
        // dpos descending = delta positions; b_j = -position, j-th smallest
        if (std::min(a.back(), dpos.back()) != 0) continue;
        ShiftedWeight w;
        w.a = a;
        w.b.assign(dpos.size(), 0);
        for (size_t j = 0; j < dpos.size(); ++j)
          w.b[j] = -dpos[dpos.size() - 1 - j];
        const int lt = longtail_via_arrows(w);
        if (lt <= 1) continue;  // tail == longtail whenever longtail <= 1
        const int tl = tail(w);
        if (lt > tl)
          found[static_cast<size_t>(part)].push_back(
              {w, tl, lt, sigma_lambda(w), longtail_witness_base(w)});
      }
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int part = 0; part < jobs; ++part) threads.emplace_back(worker, part);
    for (auto& t : threads) t.join();
  }
  std::vector<GapWitness> out;
  for (auto& part : found)
    out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end(), [](const GapWitness& x, const GapWitness& y) {
    return std::tie(x.weight.a, x.weight.b) < std::tie(y.weight.a, y.weight.b);
  });
  return out;
}

}  // namespace wdc
