#include "wdc/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "wdc/tails.hpp"

namespace wdc {

ShiftedWeight oracle_shifted_weight(const ShiftedWeight& w,
                                    const BaseWord& word) {
  require_dominant(w);
  if (word.m() != w.m() || word.n() != w.n())
    throw Error(Errc::dimension_mismatch,
                "base word shape does not match the weight");
  return oracle_transport_along(w, reflection_sequence(word));
}

ShiftedWeight oracle_transport_along(const ShiftedWeight& w,
                                     const std::vector<RightOddRoot>& order) {
  ShiftedWeight cur = w;
  BaseWord base = BaseWord::distinguished(w.m(), w.n());
  for (const RightOddRoot& r : order) {
    SignedOddRoot alpha{r, +1};
    base = reflect_base(base, alpha);  // throws when the order is invalid
    cur = reflect_shifted_weight(cur, alpha);
  }
  return cur;
}

std::vector<RightOddRoot> random_valid_order(const BaseWord& word,
                                             std::mt19937& rng) {
  std::vector<RightOddRoot> remaining = b_sigma(word);
  std::vector<RightOddRoot> order;
  BaseWord cur = BaseWord::distinguished(word.m(), word.n());
  while (!remaining.empty()) {
    std::vector<size_t> valid;
    for (size_t t = 0; t < remaining.size(); ++t) {
      IncomparableSet simple = incomparable_set_of_base(cur);
      if (std::find(simple.roots.begin(), simple.roots.end(), remaining[t]) !=
          simple.roots.end())
        valid.push_back(t);
    }
    std::uniform_int_distribution<size_t> pick(0, valid.size() - 1);
    size_t chosen = valid[pick(rng)];
    cur = reflect_base(cur, SignedOddRoot{remaining[chosen], +1});
    order.push_back(remaining[chosen]);
    remaining.erase(remaining.begin() + static_cast<long>(chosen));
  }
  return order;
}

Ctd oracle_ctd(const ShiftedWeight& w) {
  require_dominant(w);
  const int m = w.m(), n = w.n();
  std::vector<std::vector<bool>> bits(static_cast<size_t>(m),
                                      std::vector<bool>(static_cast<size_t>(n)));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      IncomparableSet s;
      s.roots.push_back({i, j});
      BaseWord base = base_from_incomparable_set(s, m, n);
      ShiftedWeight t = oracle_shifted_weight(w, base);
      bits[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] =
          t.eps(i) == t.delta_pos(j);
    }
  // package row windows; a gap inside a row cannot be represented, so it is
  // encoded as a negative sentinel window that compares unequal to anything
  // the closed form produces
  Ctd out;
  out.m = m;
  out.n = n;
  out.window.assign(static_cast<size_t>(m), {1, 0});
  for (int i = 1; i <= m; ++i) {
    std::vector<int> set_bits;
    for (int j = 1; j <= n; ++j)
      if (bits[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1])
        set_bits.push_back(j);
    if (set_bits.empty()) continue;
    const int lo = set_bits.front(), hi = set_bits.back();
    const bool contiguous = hi - lo + 1 == static_cast<int>(set_bits.size());
    out.window[static_cast<size_t>(i) - 1] =
        contiguous ? std::pair{lo, hi} : std::pair{-lo, -hi};
  }
  return out;
}

int oracle_longtail(const ShiftedWeight& w) {
  require_dominant(w);
  if (base_count(w.m(), w.n()) > 2704156ull)  // C(24,12)
    throw Error(Errc::enumeration_too_large,
                "too many bases for the brute-force longtail");
  int best = 0;
  BaseWord word = first_base_word(w.m(), w.n());
  do {
    best = std::max(best, s_value(oracle_shifted_weight(w, word)));
  } while (next_base_word(word));
  return best;
}

namespace {

int max_antichain(const std::vector<RightOddRoot>& cells, size_t from,
                  std::vector<RightOddRoot>& chosen) {
  if (from == cells.size()) return 0;
  // skip cells[from]
  int best = max_antichain(cells, from + 1, chosen);
  // or take it when compatible
  bool ok = true;
  for (const RightOddRoot& c : chosen)
    if (!roots_incomparable(c, cells[from])) {
      ok = false;
      break;
    }
  if (ok) {
    chosen.push_back(cells[from]);
    best = std::max(best, 1 + max_antichain(cells, from + 1, chosen));
    chosen.pop_back();
  }
  return best;
}

}  // namespace

int oracle_s_value(const ShiftedWeight& w) {
  OrthogonalityMask mask = orthogonality_mask(w);
  if (mask.stars.size() > 20)
    throw Error(Errc::too_many_stars,
                "too many starred cells for the brute-force search");
  std::vector<RightOddRoot> chosen;
  return max_antichain(mask.stars, 0, chosen);
}

std::string OracleReport::to_json() const {
  std::ostringstream out;
  out << "{\"checked\": " << checked << ", \"mismatches\": [";
  for (size_t t = 0; t < mismatches.size(); ++t) {
    const Mismatch& mm = mismatches[t];
    if (t) out << ", ";
    out << "{\"what\": \"" << mm.what << "\", \"input\": \"" << mm.input
        << "\", \"expected\": \"" << mm.expected << "\", \"got\": \""
        << mm.got << "\"}";
  }
  out << "]}";
  return out.str();
}

namespace {

std::vector<std::vector<int>> desc_tuples(int k, int hi) {
  std::vector<std::vector<int>> out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  if (hi + 1 < k) return out;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int t = 0; t < k; ++t) idx[static_cast<size_t>(t)] = t;
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

std::string diagram_str(const WeightDiagram& d) {
  std::ostringstream out;
  for (const auto& [p, c] : d.cells) {
    out << p << ":";
    for (int t = 0; t < c.x; ++t) out << 'X';
    if (c.marker == Marker::gt) out << '>';
    if (c.marker == Marker::lt) out << '<';
    out << ' ';
  }
  return out.str();
}

int max_stack(const WeightDiagram& d) {
  int best = 0;
  for (const auto& [p, c] : d.cells) best = std::max(best, c.x);
  return best;
}

}  // namespace

void for_each_canonical_dominant(
    int m, int n, int bound,
    const std::function<void(const ShiftedWeight&)>& fn) {
  auto eps_tuples = desc_tuples(m, bound);
  auto delta_tuples = desc_tuples(n, bound);
  for (const auto& a : eps_tuples)
    for (const auto& dpos : delta_tuples) {
      int lo = bound + 1;
      if (!a.empty()) lo = std::min(lo, a.back());
      if (!dpos.empty()) lo = std::min(lo, dpos.back());
      if (m + n > 0 && lo != 0) continue;
      ShiftedWeight w;
      w.a = a;
      w.b.assign(dpos.size(), 0);
      for (size_t j = 0; j < dpos.size(); ++j)
        w.b[j] = -dpos[dpos.size() - 1 - j];
      fn(w);
    }
}

OracleReport run_verification_suite(int m, int n, int bound) {
  OracleReport report;
  std::mt19937 rng(0xC0FFEE);

  auto check = [&](bool ok, const std::string& what, const std::string& input,
                   const std::string& expected, const std::string& got) {
    ++report.checked;
    if (!ok && report.mismatches.size() < 200)
      report.mismatches.push_back({what, input, expected, got});
  };

  for_each_canonical_dominant(m, n, bound, [&](const ShiftedWeight& w) {
    const std::string in = w.str();
    WeightDiagram d = weight_diagram(w);
    ArrowDiagram ad = arrow_diagram(w);
    CapDiagram caps = cap_diagram(w);
    Ctd c = ctd(w);
    const int atyp = atypicality(w);

    // closed-form CTD against the probing oracle
    Ctd oc = oracle_ctd(w);
    check(c == oc, "ctd vs oracle", in, "", "");

    // the three longtail formulas against the brute force
    const int lt_ctd = longtail_via_ctd(w);
    const int lt_arrows = longtail_via_arrows(w);
    const int lt_caps = longtail_via_caps(w);
    const int lt_oracle = oracle_longtail(w);
    check(lt_ctd == lt_oracle && lt_arrows == lt_oracle && lt_caps == lt_oracle,
          "longtail formulas", in, std::to_string(lt_oracle),
          std::to_string(lt_ctd) + "/" + std::to_string(lt_arrows) + "/" +
              std::to_string(lt_caps));

    // endpoints strictly decrease down the rows
    for (int i = 1; i < m; ++i)
      check(ad.k[static_cast<size_t>(i)] < ad.k[static_cast<size_t>(i) - 1],
            "arrow endpoints strictly decreasing", in, "",
            "row " + std::to_string(i));

    // window monotonicity along the rows
    for (int i = 1; i < m; ++i) {
      const int Mi = ad.M[static_cast<size_t>(i) - 1];
      const int Mi1 = ad.M[static_cast<size_t>(i)];
      const int si = Mi - (ad.k[static_cast<size_t>(i) - 1] - w.eps(i) - 1);
      const int si1 =
          Mi1 - (ad.k[static_cast<size_t>(i)] - w.eps(i + 1) - 1);
      check(Mi1 <= Mi && si1 <= si, "window monotonicity", in,
            "M and window starts non-decreasing upward",
            "row " + std::to_string(i));
    }

    // cap ends are exactly the arrow endpoints on empty positions
    {
      std::set<int> cap_ends;
      for (const Cap& cp : caps.caps) cap_ends.insert(cp.end);
      std::set<int> circ_ends;
      for (int i = 0; i < m; ++i)
        if (d.empty_at(ad.k[static_cast<size_t>(i)]))
          circ_ends.insert(ad.k[static_cast<size_t>(i)]);
      check(cap_ends == circ_ends, "cap ends vs arrow endpoints", in, "", "");
    }

    // arrow/cap duality counts at every position in range
    if (!d.cells.empty()) {
      const int lo = d.cells.begin()->first - 1;
      const int hi = std::max(d.cells.rbegin()->first,
                              ad.k.empty() ? 0 : ad.k.front()) +
                     1;
      for (int r = lo; r <= hi; ++r) {
        int arrows_over = 0, caps_over = 0;
        for (int i = 0; i < m; ++i)
          if (ad.start[static_cast<size_t>(i)] <= r &&
              r < ad.k[static_cast<size_t>(i)])
            ++arrows_over;
        for (const Cap& cp : caps.caps)
          if (cp.start <= r && r < cp.end) ++caps_over;
        check(arrows_over == caps_over, "arrow/cap duality",
              in + " at r=" + std::to_string(r), std::to_string(arrows_over),
              std::to_string(caps_over));
      }
    }

    // the walk: endpoints, step shape, and the three structural properties
    std::vector<ShiftedWeight> walk = distinguished_to_anti_walk(w);
    check(static_cast<int>(walk.size()) == m + 1, "walk length", in,
          std::to_string(m + 1), std::to_string(walk.size()));
    check(walk.front() == w, "walk starts at the weight", in, "", "");
    WeightDiagram anti = anti_distinguished_diagram(w);
    check(weight_diagram(walk.back()) == anti, "walk endpoint vs cap moves",
          in, diagram_str(anti), diagram_str(weight_diagram(walk.back())));
    check(weight_diagram(shifted_weight_for_base(
              w, BaseWord::anti_distinguished(m, n))) == anti,
          "anti transport vs cap moves", in, "", "");
    // consecutive steps move exactly one cross along row i+1's arrow
    for (int i = m - 1; i >= 0; --i) {
      WeightDiagram before = weight_diagram(walk[static_cast<size_t>(m - i - 1)]);
      WeightDiagram after = weight_diagram(walk[static_cast<size_t>(m - i)]);
      const int ai = w.eps(i + 1);
      const int ki = ad.k[static_cast<size_t>(i)];
      if (ai == ki) {
        check(before == after, "walk step without a move", in, "",
              "row " + std::to_string(i + 1));
      } else {
        WeightDiagram moved = before;
        auto it = moved.cells.find(ai);
        bool movable = it != moved.cells.end() && it->second.x > 0;
        check(movable, "walk step has a cross to move", in,
              std::to_string(ai), diagram_str(before));
        if (movable) {
          it->second.x -= 1;
          if (it->second.symbols() == 0) moved.cells.erase(it);
          moved.cells[ki].x += 1;
          check(moved == after, "walk step moves one cross to the endpoint",
                in, diagram_str(moved), diagram_str(after));
        }
      }
    }
    for (int step = 0; step <= m; ++step) {
      const ShiftedWeight& wi = walk[static_cast<size_t>(m - step)];
      const int i = step;  // walk[m - i] corresponds to e^i d^n e^(m-i)
      WeightDiagram di = weight_diagram(wi);
      bool no_cross_with_lt = true;
      for (const auto& [p, cell] : di.cells)
        if (cell.x > 0 && cell.marker == Marker::lt) no_cross_with_lt = false;
      for (size_t j = 1; j < wi.b.size(); ++j)
        if (wi.b[j - 1] <= wi.b[j]) no_cross_with_lt = false;
      check(no_cross_with_lt, "walk: delta part stays regular",
            in + " step " + std::to_string(i), "", diagram_str(di));
      if (i >= 1) {
        bool covered = true;
        for (int p = w.eps(i); p < ad.k[static_cast<size_t>(i) - 1]; ++p) {
          Cell cell = di.at(p);
          if (!(cell.x >= 1 || cell.marker == Marker::lt)) covered = false;
        }
        check(covered, "walk: positions under the arrow are blocked",
              in + " step " + std::to_string(i), "", diagram_str(di));
        const int ki1 = (i == m) ? std::numeric_limits<int>::min()
                                 : ad.k[static_cast<size_t>(i)];
        bool frozen = true;
        for (const auto& [p, cell] : d.cells)
          if (p > ki1 && !(di.at(p) == cell)) frozen = false;
        for (const auto& [p, cell] : di.cells)
          if (p > ki1 && !(d.at(p) == cell)) frozen = false;
        check(frozen, "walk: diagram frozen right of the next endpoint",
              in + " step " + std::to_string(i), diagram_str(d),
              diagram_str(di));
      }
    }

    // atoms against intervals, and the CTD locality they grant
    std::vector<Segment> ivs = intervals(w);
    std::vector<Atom> atoms = atom_index_sets(w);
    {
      std::vector<Segment> atom_segs;
      for (const Atom& at : atoms) atom_segs.push_back(at.segment);
      check(atom_segs == ivs, "atom segments vs intervals", in, "", "");
      for (const Atom& at : atoms) {
        ShiftedWeight aw = atom_weight(w, at);
        check(validate_dominant(aw), "atom weight dominant", in, "", aw.str());
        // diagram of the atom = the original with foreign symbols erased
        WeightDiagram expect;
        for (int i : at.pos) {
          int p = w.eps(i);
          expect.cells[p] = d.at(p);
        }
        for (int j : at.neg) {
          int p = w.delta_pos(j);
          expect.cells[p] = d.at(p);
        }
        check(weight_diagram(aw) == expect, "atom diagram restriction", in,
              diagram_str(expect), diagram_str(weight_diagram(aw)));
        // CTD of the atom = restriction of the CTD
        Ctd ca = ctd(aw);
        bool agree = true;
        for (size_t ii = 0; ii < at.pos.size(); ++ii)
          for (size_t jj = 0; jj < at.neg.size(); ++jj)
            if (ca.bit(static_cast<int>(ii) + 1, static_cast<int>(jj) + 1) !=
                c.bit(at.pos[ii], at.neg[jj]))
              agree = false;
        check(agree, "atom ctd restriction", in, "", "");
      }
      // every set bit lies inside a single atom's rectangle
      for (const RightOddRoot& r : c.ones()) {
        bool inside = false;
        for (const Atom& at : atoms)
          if (std::binary_search(at.pos.begin(), at.pos.end(), r.i) &&
              std::binary_search(at.neg.begin(), at.neg.end(), r.j))
            inside = true;
        check(inside, "ctd bit inside an atom", in,
              std::to_string(r.i) + ":" + std::to_string(r.j), "");
      }
    }

    // dagger data
    DaggerDiagram dag = phi(w);
    check(is_dagger_diagram(dag.diagram), "phi lands in the dagger space", in,
          "", diagram_str(dag.diagram));
    check(psi(dag) == w, "psi(phi) identity", in, w.str(), psi(dag).str());
    BaseWord sig = sigma_lambda(w);
    ShiftedWeight dagger_wt = shifted_weight_for_base(w, sig);
    check(weight_diagram(dagger_wt) == dag.diagram,
          "sigma_lambda transports onto phi", in, diagram_str(dag.diagram),
          diagram_str(weight_diagram(dagger_wt)));
    const int tl = tail(w);
    check(tl <= lt_oracle, "tail <= longtail", in, "", "");
    check((dag.stack ? dag.stack->second : std::min(atyp, 1)) <= tl,
          "stacked multiplicity <= tail", in, "", "");

    // a base attaining the longtail through stacked crosses
    {
      BaseWord witness = longtail_witness_base(w);
      WeightDiagram dw = weight_diagram(shifted_weight_for_base(w, witness));
      check(max_stack(dw) >= lt_oracle || lt_oracle == 0,
            "witness base stacks longtail crosses", in,
            std::to_string(lt_oracle), std::to_string(max_stack(dw)));
    }

    // the dual arrow diagram mirrors the primal one on the mirrored weight
    {
      DualArrowDiagram dual = dual_arrow_diagram(w);
      ShiftedWeight mirror{w.b, w.a};
      ArrowDiagram mad = arrow_diagram(mirror);
      bool agree = dual.l.size() == mad.k.size();
      for (size_t j = 0; agree && j < dual.l.size(); ++j)
        if (dual.l[j] != -mad.k[j]) agree = false;
      check(agree, "dual arrows mirror the primal", in, "", "");
    }

    // per-base checks
    std::vector<std::vector<bool>> orthogonal_somewhere(
        static_cast<size_t>(m), std::vector<bool>(static_cast<size_t>(n)));
    BaseWord word = first_base_word(m, n);
    do {
      const std::string bin = in + " @ " + word.str();
      ShiftedWeight formula = shifted_weight_for_base(w, word);
      ShiftedWeight walked = oracle_shifted_weight(w, word);
      check(formula == walked, "transport formula vs reflection walk", bin,
            walked.str(), formula.str());
      for (int run = 0; run < 3; ++run) {
        ShiftedWeight other =
            oracle_transport_along(w, random_valid_order(word, rng));
        check(other == walked, "transport order independence", bin,
              walked.str(), other.str());
      }
      check(atypicality(formula) == atyp, "atypicality invariance", bin,
            std::to_string(atyp), std::to_string(atypicality(formula)));
      bool bounded = true;
      for (int i = 1; i <= m; ++i)
        if (formula.eps(i) < w.eps(i) ||
            formula.eps(i) > ad.k[static_cast<size_t>(i) - 1])
          bounded = false;
      for (int j = 1; j <= n; ++j)
        if (formula.delta_pos(j) < w.delta_pos(j)) bounded = false;
      check(bounded, "transported coordinates stay within the arrows", bin,
            "", formula.str());
      WeightDiagram df = weight_diagram(formula);
      const int stack = max_stack(df);
      const int sv = s_value(formula);
      check(stack <= sv && sv <= atyp, "stack <= s <= atypicality", bin,
            "", std::to_string(stack) + "/" + std::to_string(sv) + "/" +
                    std::to_string(atyp));
      if (orthogonality_mask(formula).stars.size() <= 12)
        check(sv == oracle_s_value(formula), "s DP vs brute force", bin,
              std::to_string(oracle_s_value(formula)), std::to_string(sv));
      // change indicators against the CTD, per simple right odd root
      for (const RightOddRoot& r : incomparable_set_of_base(word).roots) {
        const bool orth = formula.eps(r.i) == formula.delta_pos(r.j);
        if (orth)
          orthogonal_somewhere[static_cast<size_t>(r.i) - 1]
                              [static_cast<size_t>(r.j) - 1] = true;
        check(orth == c.bit(r.i, r.j), "change indicator vs ctd bit",
              bin + " root " + std::to_string(r.i) + ":" +
                  std::to_string(r.j),
              c.bit(r.i, r.j) ? "1" : "0", orth ? "1" : "0");
      }
      // unshifted transport: lambda_Sigma + rho_Sigma recovers the shifted
      // weight, with rho_Sigma = rho + sum of the b_sigma roots
      {
        ShiftedWeight unshifted = weight_for_base(w, word);
        ShiftedWeight reassembled = unshifted;
        ShiftedWeight r = rho(m, n);
        for (int i = 1; i <= m; ++i)
          reassembled.a[static_cast<size_t>(i) - 1] += r.eps(i);
        for (int j = 1; j <= n; ++j)
          reassembled.b[static_cast<size_t>(j) - 1] += r.delta_coord(j);
        for (const RightOddRoot& root : b_sigma(word)) {
          reassembled.a[static_cast<size_t>(root.i) - 1] += 1;
          reassembled.b[static_cast<size_t>(root.j) - 1] -= 1;
        }
        check(reassembled == formula,
              "unshifted + rho_Sigma reassembles the shifted transport", bin,
              formula.str(), reassembled.str());
      }
      // word <-> incomparable set roundtrip and the reflection count law
      check(base_from_incomparable_set(incomparable_set_of_base(word), m, n) ==
                word,
            "word/set roundtrip", bin, "", "");
      for (const RightOddRoot& r : incomparable_set_of_base(word).roots) {
        BaseWord reflected = reflect_base(word, SignedOddRoot{r, +1});
        check(b_sigma(reflected).size() == b_sigma(word).size() + 1,
              "reflection grows the root set by one", bin, "", "");
      }
      // the inversion-profile b_sigma against the order-theoretic one
      {
        std::vector<RightOddRoot> closure_complement;
        const auto simple = incomparable_set_of_base(word).roots;
        for (int i = 1; i <= m; ++i)
          for (int j = 1; j <= n; ++j) {
            bool above = false;
            for (const RightOddRoot& s : simple)
              if (root_leq(s, RightOddRoot{i, j})) above = true;
            if (!above) closure_complement.push_back({i, j});
          }
        check(closure_complement == b_sigma(word),
              "b_sigma vs upward-closure complement", bin, "", "");
      }
    } while (next_base_word(word));

    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n; ++j)
        check(orthogonal_somewhere[static_cast<size_t>(i) - 1]
                                  [static_cast<size_t>(j) - 1] ==
                  c.bit(i, j),
              "ctd bit iff orthogonal somewhere",
              in + " root " + std::to_string(i) + ":" + std::to_string(j),
              c.bit(i, j) ? "1" : "0", "");
  });

  return report;
}

}  // namespace wdc
