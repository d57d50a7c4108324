// Precomputed window tables: ideal list in report order, containment
// matrix, windowed products (-1 marks out-of-window), intersections.
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "idealops/ideal.hpp"

namespace idealops {

struct Lattice {
  Window w;
  std::vector<Ideal> ideals;
  int unit_idx = -1;
  int zero_idx = -1;
  // geq[i][j] == 1 iff ideals[i] contains ideals[j]
  std::vector<std::vector<uint8_t>> geq;
  // prod[i][j]: index of the product, or -1 if out of window
  std::vector<std::vector<int>> prod;
  // meet[i][j]: index of the intersection (always representable)
  std::vector<std::vector<int>> meet;
  // supersets[i]: indices j with ideals[j] >= ideals[i], ascending index
  std::vector<std::vector<int>> supersets;
  // factor pairs (a,b) with prod[a][b] == i (a <= b)
  std::vector<std::vector<std::pair<int, int>>> factors;
  // indices of the window's principal-ideal generators for axiom (e)
  std::vector<int> principal_gens;

  int size() const { return static_cast<int>(ideals.size()); }
  int index_of(const Ideal& I) const;  // -1 if absent
  bool leq(int i, int j) const { return geq[j][i] != 0; }
};

std::shared_ptr<const Lattice> build_lattice(const Window& w);

// A closure-operation candidate tabulated on a window: img[i] is the index
// of the image of ideals[i].
struct RawMap {
  std::shared_ptr<const Lattice> lat;
  std::vector<int16_t> img;

  bool operator==(const RawMap& o) const { return img == o.img; }
  bool operator<(const RawMap& o) const { return img < o.img; }
};

RawMap identity_raw(std::shared_ptr<const Lattice> lat);

// pointwise composition: (f after g)(I) = f(g(I))
RawMap compose(const RawMap& f, const RawMap& g);

std::string to_string(const RawMap& m);

}  // namespace idealops
