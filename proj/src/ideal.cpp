#include "idealops/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace idealops {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void require_same_family(const Ideal& I, const Ideal& J) {
  require(I.fam == J.fam, "ideals from different ring families");
  if (I.fam == Family::ded && I.kind != Ideal::Kind::zero &&
      J.kind != Ideal::Kind::zero) {
    require(I.exps.size() == J.exps.size(),
            "ideals from Dedekind rings with different prime counts");
  }
}

bool is_prime_int(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::dvr: return "dvr";
    case Family::ded: return "ded";
    case Family::cusp: return "cusp";
  }
  return "?";
}

Ring dvr_ring() { return Ring{Family::dvr, 0, 0}; }

Ring ded_ring(int nprimes) {
  require(nprimes >= 1 && nprimes <= 4, "nprimes must be in [1,4]");
  return Ring{Family::ded, 0, nprimes};
}

Ring cusp_ring(int p) {
  require(is_prime_int(p) && p <= 7, "cusp field characteristic must be a prime <= 7");
  return Ring{Family::cusp, p, 0};
}

Window dvr_window(int D) {
  require(D >= 1, "dvr window needs D >= 1");
  return Window{dvr_ring(), D};
}

Window ded_window(int nprimes, int D) {
  require(D >= 1, "ded window needs D >= 1");
  return Window{ded_ring(nprimes), D};
}

Window cusp_window(int p, int D) {
  require(D >= 4, "cusp window needs D >= 4");
  return Window{cusp_ring(p), D};
}

Ideal Ideal::dvr_pow(int n) {
  require(n >= 0, "dvr power must be >= 0");
  Ideal I;
  I.fam = Family::dvr;
  I.kind = Kind::dvr_pow;
  I.deg = n;
  return I;
}

Ideal Ideal::dvr_zero() {
  Ideal I;
  I.fam = Family::dvr;
  I.kind = Kind::zero;
  return I;
}

Ideal Ideal::ded(std::vector<int> exps) {
  require(!exps.empty(), "empty exponent vector");
  for (int e : exps) require(e >= 0, "negative exponent");
  Ideal I;
  I.fam = Family::ded;
  I.kind = Kind::ded_exps;
  I.exps = std::move(exps);
  return I;
}

Ideal Ideal::ded_unit(int nprimes) { return ded(std::vector<int>(nprimes, 0)); }

Ideal Ideal::ded_zero() {
  Ideal I;
  I.fam = Family::ded;
  I.kind = Kind::zero;
  return I;
}

Ideal Ideal::cusp_unit() {
  Ideal I;
  I.fam = Family::cusp;
  I.kind = Kind::unit;
  return I;
}

Ideal Ideal::cusp_m(int i) {
  require(i >= 2, "M(i) needs i >= 2");
  Ideal I;
  I.fam = Family::cusp;
  I.kind = Kind::mtwo;
  I.deg = i;
  return I;
}

Ideal Ideal::cusp_p(int i, int a) {
  require(i >= 2, "P(i,a) needs i >= 2");
  require(a >= 0, "field element must be a canonical representative");
  Ideal I;
  I.fam = Family::cusp;
  I.kind = Kind::prin;
  I.deg = i;
  I.coef = a;
  return I;
}

Ideal Ideal::cusp_zero() {
  Ideal I;
  I.fam = Family::cusp;
  I.kind = Kind::zero;
  return I;
}

bool Ideal::is_unit() const {
  switch (kind) {
    case Kind::unit: return true;
    case Kind::dvr_pow: return deg == 0;
    case Kind::ded_exps:
      return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
    default: return false;
  }
}

std::string to_string(const Ideal& I) {
  std::ostringstream os;
  switch (I.kind) {
    case Ideal::Kind::zero: os << "(0)"; break;
    case Ideal::Kind::unit: os << "R"; break;
    case Ideal::Kind::dvr_pow:
      if (I.deg == 0)
        os << "R";
      else if (I.deg == 1)
        os << "P";
      else
        os << "P^" << I.deg;
      break;
    case Ideal::Kind::ded_exps: {
      if (I.is_unit()) {
        os << "R";
      } else {
        os << "I(";
        for (size_t k = 0; k < I.exps.size(); ++k) {
          if (k) os << ",";
          os << I.exps[k];
        }
        os << ")";
      }
      break;
    }
    case Ideal::Kind::mtwo: os << "M(" << I.deg << ")"; break;
    case Ideal::Kind::prin: os << "P(" << I.deg << "," << I.coef << ")"; break;
  }
  return os.str();
}

int window_rank(const Ideal& I) {
  switch (I.kind) {
    case Ideal::Kind::zero: return 0;
    case Ideal::Kind::unit: return 0;
    case Ideal::Kind::dvr_pow: return I.deg;
    case Ideal::Kind::ded_exps:
      return *std::max_element(I.exps.begin(), I.exps.end());
    case Ideal::Kind::mtwo:
    case Ideal::Kind::prin: return I.deg;
  }
  return 0;
}

bool in_window(const Window& w, const Ideal& I) {
  return I.fam == w.ring.family && window_rank(I) <= w.D;
}

bool contains(const Ideal& I, const Ideal& J) {
  require_same_family(I, J);
  if (J.kind == Ideal::Kind::zero) return true;
  if (I.kind == Ideal::Kind::zero) return false;
  switch (I.fam) {
    case Family::dvr: return I.deg <= J.deg;
    case Family::ded: {
      for (size_t k = 0; k < I.exps.size(); ++k)
        if (I.exps[k] > J.exps[k]) return false;
      return true;
    }
    case Family::cusp: {
      if (I.kind == Ideal::Kind::unit) return true;
      if (J.kind == Ideal::Kind::unit) return false;
      bool Im = I.kind == Ideal::Kind::mtwo;
      bool Jm = J.kind == Ideal::Kind::mtwo;
      if (Im && Jm) return I.deg <= J.deg;
      if (Im && !Jm) return I.deg <= J.deg;
      if (!Im && Jm) return J.deg >= I.deg + 2;
      // both principal
      if (I.deg == J.deg) return I.coef == J.coef;
      return J.deg >= I.deg + 2;
    }
  }
  return false;
}

Ideal product_exact(const Ring& r, const Ideal& I, const Ideal& J) {
  require_same_family(I, J);
  require(I.fam == r.family, "ideal does not belong to this ring");
  if (I.is_zero() || J.is_zero()) {
    switch (r.family) {
      case Family::dvr: return Ideal::dvr_zero();
      case Family::ded: return Ideal::ded_zero();
      case Family::cusp: return Ideal::cusp_zero();
    }
  }
  switch (r.family) {
    case Family::dvr: return Ideal::dvr_pow(I.deg + J.deg);
    case Family::ded: {
      std::vector<int> e(I.exps.size());
      for (size_t k = 0; k < e.size(); ++k) e[k] = I.exps[k] + J.exps[k];
      return Ideal::ded(std::move(e));
    }
    case Family::cusp: {
      if (I.kind == Ideal::Kind::unit) return J;
      if (J.kind == Ideal::Kind::unit) return I;
      bool Im = I.kind == Ideal::Kind::mtwo;
      bool Jm = J.kind == Ideal::Kind::mtwo;
      int d = I.deg + J.deg;
      if (Im || Jm) return Ideal::cusp_m(d);
      return Ideal::cusp_p(d, (I.coef + J.coef) % r.p);
    }
  }
  throw std::logic_error("unreachable");
}

std::optional<Ideal> product(const Window& w, const Ideal& I, const Ideal& J) {
  Ideal prod = product_exact(w.ring, I, J);
  if (!in_window(w, prod)) return std::nullopt;
  return prod;
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  require_same_family(I, J);
  if (I.is_zero() || J.is_zero()) return I.is_zero() ? I : J;
  switch (I.fam) {
    case Family::dvr: return Ideal::dvr_pow(std::max(I.deg, J.deg));
    case Family::ded: {
      std::vector<int> e(I.exps.size());
      for (size_t k = 0; k < e.size(); ++k)
        e[k] = std::max(I.exps[k], J.exps[k]);
      return Ideal::ded(std::move(e));
    }
    case Family::cusp: {
      if (I.kind == Ideal::Kind::unit) return J;
      if (J.kind == Ideal::Kind::unit) return I;
      bool Im = I.kind == Ideal::Kind::mtwo;
      bool Jm = J.kind == Ideal::Kind::mtwo;
      if (Im && Jm) return Ideal::cusp_m(std::max(I.deg, J.deg));
      if (Im != Jm) {
        const Ideal& m = Im ? I : J;
        const Ideal& p = Im ? J : I;
        if (m.deg <= p.deg) return p;
        if (m.deg >= p.deg + 2) return m;
        return Ideal::cusp_m(p.deg + 2);  // m.deg == p.deg + 1
      }
      // both principal; normalize so I has the smaller degree
      const Ideal& a = I.deg <= J.deg ? I : J;
      const Ideal& b = I.deg <= J.deg ? J : I;
      if (a.deg == b.deg)
        return a.coef == b.coef ? a : Ideal::cusp_m(a.deg + 2);
      if (b.deg == a.deg + 1) return Ideal::cusp_m(a.deg + 3);
      return b;  // b.deg >= a.deg + 2, so b is inside a
    }
  }
  throw std::logic_error("unreachable");
}

Ideal integral_closure(const Ideal& I) {
  require(I.fam == Family::cusp, "integral closure is implemented for the cuspidal family");
  if (I.kind == Ideal::Kind::prin) return Ideal::cusp_m(I.deg);
  return I;
}

std::vector<Ideal> enumerate_ideals(const Window& w) {
  std::vector<Ideal> out;
  switch (w.ring.family) {
    case Family::dvr: {
      for (int i = 0; i <= w.D; ++i) out.push_back(Ideal::dvr_pow(i));
      out.push_back(Ideal::dvr_zero());
      break;
    }
    case Family::ded: {
      const int k = w.ring.nprimes;
      std::vector<std::vector<int>> vecs;
      std::vector<int> cur(k, 0);
      // all vectors in [0,D]^k
      while (true) {
        vecs.push_back(cur);
        int j = k - 1;
        while (j >= 0 && cur[j] == w.D) cur[j--] = 0;
        if (j < 0) break;
        ++cur[j];
      }
      std::sort(vecs.begin(), vecs.end(), [](const auto& x, const auto& y) {
        int sx = std::accumulate(x.begin(), x.end(), 0);
        int sy = std::accumulate(y.begin(), y.end(), 0);
        if (sx != sy) return sx < sy;
        return x < y;
      });
      for (auto& v : vecs) out.push_back(Ideal::ded(std::move(v)));
      out.push_back(Ideal::ded_zero());
      break;
    }
    case Family::cusp: {
      out.push_back(Ideal::cusp_unit());
      for (int i = 2; i <= w.D; ++i) {
        out.push_back(Ideal::cusp_m(i));
        for (int a = 0; a < w.ring.p; ++a) out.push_back(Ideal::cusp_p(i, a));
      }
      out.push_back(Ideal::cusp_zero());
      break;
    }
  }
  return out;
}

}  // namespace idealops
