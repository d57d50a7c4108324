#include "idealops/lattice.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace idealops {

int Lattice::index_of(const Ideal& I) const {
  for (int i = 0; i < size(); ++i)
    if (ideals[i] == I) return i;
  return -1;
}

std::shared_ptr<const Lattice> build_lattice(const Window& w) {
  auto lat = std::make_shared<Lattice>();
  lat->w = w;
  lat->ideals = enumerate_ideals(w);
  const int n = lat->size();
  for (int i = 0; i < n; ++i) {
    if (lat->ideals[i].is_unit()) lat->unit_idx = i;
    if (lat->ideals[i].is_zero()) lat->zero_idx = i;
  }
  lat->geq.assign(n, std::vector<uint8_t>(n, 0));
  lat->prod.assign(n, std::vector<int>(n, -1));
  lat->meet.assign(n, std::vector<int>(n, -1));
  lat->supersets.assign(n, {});
  lat->factors.assign(n, {});
  std::map<Ideal, int> idx;
  auto key = [&](const Ideal& I) {
    auto it = idx.find(I);
    if (it == idx.end()) throw std::logic_error("ideal not in window: " + to_string(I));
    return it->second;
  };
  std::map<Ideal, int> dummy;
  for (int i = 0; i < n; ++i) idx[lat->ideals[i]] = i;
  (void)dummy;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      lat->geq[i][j] = contains(lat->ideals[i], lat->ideals[j]) ? 1 : 0;
      auto pr = product(w, lat->ideals[i], lat->ideals[j]);
      lat->prod[i][j] = pr ? key(*pr) : -1;
      lat->meet[i][j] = key(intersect(lat->ideals[i], lat->ideals[j]));
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (lat->geq[j][i]) lat->supersets[i].push_back(j);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      int t = lat->prod[a][b];
      if (t >= 0) lat->factors[t].push_back({a, b});
    }
  switch (w.ring.family) {
    case Family::dvr:
      lat->principal_gens.push_back(key(Ideal::dvr_pow(1)));
      break;
    case Family::ded:
      for (int k = 0; k < w.ring.nprimes; ++k) {
        std::vector<int> e(w.ring.nprimes, 0);
        e[k] = 1;
        lat->principal_gens.push_back(key(Ideal::ded(e)));
      }
      break;
    case Family::cusp:
      for (int i = 0; i < n; ++i)
        if (lat->ideals[i].kind == Ideal::Kind::prin)
          lat->principal_gens.push_back(i);
      break;
  }
  return lat;
}

RawMap identity_raw(std::shared_ptr<const Lattice> lat) {
  RawMap m;
  m.img.resize(lat->size());
  for (int i = 0; i < lat->size(); ++i) m.img[i] = static_cast<int16_t>(i);
  m.lat = std::move(lat);
  return m;
}

RawMap compose(const RawMap& f, const RawMap& g) {
  if (f.lat->ideals != g.lat->ideals)
    throw std::invalid_argument("composing maps over different windows");
  RawMap h;
  h.lat = f.lat;
  h.img.resize(f.img.size());
  for (size_t i = 0; i < f.img.size(); ++i) h.img[i] = f.img[g.img[i]];
  return h;
}

std::string to_string(const RawMap& m) {
  std::ostringstream os;
  for (int i = 0; i < m.lat->size(); ++i) {
    if (i) os << ", ";
    os << to_string(m.lat->ideals[i]) << "->" << to_string(m.lat->ideals[m.img[i]]);
  }
  return os.str();
}

}  // namespace idealops
