#include "idealops/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace idealops {

namespace {

struct Searcher {
  const Lattice& L;
  const EnumOptions& opts;
  const std::function<bool(const RawMap&)>& sink;
  RawMap cur;
  bool stopped = false;

  Searcher(std::shared_ptr<const Lattice> lat, const EnumOptions& o,
           const std::function<bool(const RawMap&)>& s)
      : L(*lat), opts(o), sink(s) {
    cur.lat = lat;
    cur.img.assign(L.size(), -1);
  }

  // The lattice order is containment-compatible (larger ideals first), so
  // at step i every superset of ideal i already has an image, and every
  // admissible image j (a superset of i) is itself already assigned.
  bool admissible(int i, int j) const {
    // idempotence: a strictly larger image must be fixed
    if (j != i && cur.img[j] != j) return false;
    // monotonicity against every assigned superset
    for (int k : L.supersets[i])
      if (k != i && !L.leq(j, cur.img[k])) return false;
    if (opts.semiprime) {
      // axiom (d) for factor pairs of i: both factors contain i, hence
      // are already assigned (or are i itself)
      const Ring& r = L.w.ring;
      for (auto [x, y] : L.factors[i]) {
        int ix = x == i ? j : cur.img[x];
        int iy = y == i ? j : cur.img[y];
        if (ix < 0 || iy < 0) continue;
        Ideal imgprod = product_exact(r, L.ideals[ix], L.ideals[iy]);
        if (!contains(L.ideals[j], imgprod)) return false;
      }
    }
    return true;
  }

  // Constancy propagation for the semiprime search (validated against
  // unpruned runs, never trusted alone):
  //  - dvr: a semiprime map constant on two consecutive powers sends every
  //    lower power to that same image;
  //  - cusp: equal images at M(k) and M(k+2) pin the bound floor, and
  //    every smaller nonzero ideal inside the floor maps to it.  (Equal
  //    images at M(k), M(k+1) only give boundedness, not the floor: the
  //    point operations realize that pattern with a different floor.)
  int forced_image(int i) const {
    if (!opts.lemma_pruning || !opts.semiprime) return -1;
    if (L.ideals[i].is_zero()) return -1;
    const auto& ideals = L.ideals;
    if (L.w.ring.family == Family::dvr) {
      for (int k = 0; k + 1 < i; ++k) {
        if (ideals[k].kind != Ideal::Kind::dvr_pow ||
            ideals[k + 1].kind != Ideal::Kind::dvr_pow)
          continue;
        if (cur.img[k] >= 0 && cur.img[k] == cur.img[k + 1] && L.leq(i, k + 1))
          return cur.img[k];
      }
      return -1;
    }
    if (L.w.ring.family == Family::cusp) {
      for (int k = 0; k < i; ++k) {
        if (ideals[k].kind != Ideal::Kind::mtwo || cur.img[k] < 0) continue;
        int k2 = L.index_of(Ideal::cusp_m(ideals[k].deg + 2));
        if (k2 < 0 || k2 >= i || cur.img[k2] != cur.img[k]) continue;
        int fk = cur.img[k];
        if (L.leq(i, fk)) return fk;
      }
      return -1;
    }
    return -1;
  }

  void dfs(int i) {
    if (stopped) return;
    if (i == L.size()) {
      if (!sink(cur)) stopped = true;
      return;
    }
    int forced = forced_image(i);
    // supersets are listed by ascending index; reversed, the candidates
    // run from the ideal itself upward
    const auto& sup = L.supersets[i];
    for (auto it = sup.rbegin(); it != sup.rend(); ++it) {
      int j = *it;
      if (forced >= 0 && j != forced) continue;
      if (!admissible(i, j)) continue;
      cur.img[i] = static_cast<int16_t>(j);
      dfs(i + 1);
      cur.img[i] = -1;
      if (stopped) return;
    }
  }
};

}  // namespace

void enumerate_closure_maps(std::shared_ptr<const Lattice> lat,
                            const EnumOptions& opts,
                            const std::function<bool(const RawMap&)>& sink) {
  if (lat->size() > opts.guard)
    throw std::invalid_argument(
        "window too large for enumeration: " + std::to_string(lat->size()) +
        " ideals exceeds the guard of " + std::to_string(opts.guard));
  Searcher s(lat, opts, sink);
  s.dfs(0);
}

std::vector<RawMap> enumerate_semiprime(std::shared_ptr<const Lattice> lat,
                                        bool lemma_pruning) {
  EnumOptions opts;
  opts.semiprime = true;
  opts.lemma_pruning = lemma_pruning;
  std::vector<RawMap> out;
  enumerate_closure_maps(lat, opts, [&](const RawMap& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

ClassificationDiff match_classification(const std::vector<RawMap>& found,
                                        const Catalog& cat) {
  ClassificationDiff diff;
  std::set<std::vector<int16_t>> found_tables;
  for (const RawMap& m : found) found_tables.insert(m.img);
  for (const RawMap& m : found)
    if (!cat.group_of_table.count(m.img)) diff.found_unexpected.push_back(m);
  for (const auto& grp : cat.groups) {
    if (!found_tables.count(cat.tables[grp[0]].img))
      diff.expected_missing.push_back(cat.ops[grp[0]]);
  }
  for (const auto& grp : cat.groups)
    if (grp.size() > 1) {
      std::vector<ClosureOp> g;
      for (int idx : grp) g.push_back(cat.ops[idx]);
      diff.aliased.push_back(std::move(g));
    }
  return diff;
}

}  // namespace idealops
