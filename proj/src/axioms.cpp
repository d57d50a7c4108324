#include "idealops/axioms.hpp"

#include <sstream>
#include <stdexcept>

namespace idealops {

std::string to_string(const Witness& w) {
  std::ostringstream os;
  os << "at " << to_string(w.x);
  if (w.y) os << ", " << to_string(*w.y);
  os << ": " << w.relation << " (got " << to_string(w.got) << ", want "
     << to_string(w.want) << ")";
  return os.str();
}

namespace {

AxiomReport check_a(const RawMap& m) {
  AxiomReport rep;
  rep.axiom = 'a';
  const Lattice& L = *m.lat;
  for (int i = 0; i < L.size(); ++i) {
    ++rep.checked;
    if (!L.leq(i, m.img[i])) {
      rep.status = AxiomReport::Status::fail;
      rep.witness = Witness{L.ideals[i], std::nullopt, L.ideals[m.img[i]],
                            L.ideals[i], "image does not contain the ideal"};
      return rep;
    }
  }
  return rep;
}

AxiomReport check_b(const RawMap& m) {
  AxiomReport rep;
  rep.axiom = 'b';
  const Lattice& L = *m.lat;
  for (int i = 0; i < L.size(); ++i)
    for (int j = 0; j < L.size(); ++j) {
      if (i == j || !L.leq(i, j)) continue;  // need ideals[i] inside ideals[j]
      ++rep.checked;
      if (!L.leq(m.img[i], m.img[j])) {
        rep.status = AxiomReport::Status::fail;
        rep.witness =
            Witness{L.ideals[i], L.ideals[j], L.ideals[m.img[i]],
                    L.ideals[m.img[j]],
                    "images of nested ideals are not nested"};
        return rep;
      }
    }
  return rep;
}

AxiomReport check_c(const RawMap& m) {
  AxiomReport rep;
  rep.axiom = 'c';
  const Lattice& L = *m.lat;
  for (int i = 0; i < L.size(); ++i) {
    ++rep.checked;
    if (m.img[m.img[i]] != m.img[i]) {
      rep.status = AxiomReport::Status::fail;
      rep.witness = Witness{L.ideals[i], std::nullopt,
                            L.ideals[m.img[m.img[i]]], L.ideals[m.img[i]],
                            "image is not closed under a second application"};
      return rep;
    }
  }
  return rep;
}

AxiomReport check_d(const RawMap& m) {
  AxiomReport rep;
  rep.axiom = 'd';
  const Lattice& L = *m.lat;
  const Ring& r = L.w.ring;
  for (int i = 0; i < L.size(); ++i)
    for (int j = i; j < L.size(); ++j) {
      int ij = L.prod[i][j];
      if (ij < 0) {
        ++rep.skipped;
        continue;
      }
      // the image product is computed exactly; only the input product
      // needs the window (the map is tabulated there)
      Ideal imgprod =
          product_exact(r, L.ideals[m.img[i]], L.ideals[m.img[j]]);
      ++rep.checked;
      if (!contains(L.ideals[m.img[ij]], imgprod)) {
        rep.status = AxiomReport::Status::fail;
        rep.witness = Witness{
            L.ideals[i], L.ideals[j], imgprod, L.ideals[m.img[ij]],
            "product of images is not inside the image of the product"};
        return rep;
      }
    }
  return rep;
}

AxiomReport check_e(const RawMap& m) {
  AxiomReport rep;
  rep.axiom = 'e';
  const Lattice& L = *m.lat;
  const Ring& r = L.w.ring;
  for (int b : L.principal_gens)
    for (int i = 0; i < L.size(); ++i) {
      int bi = L.prod[b][i];
      if (bi < 0) {
        ++rep.skipped;
        continue;
      }
      Ideal bfi = product_exact(r, L.ideals[b], L.ideals[m.img[i]]);
      ++rep.checked;
      if (!(L.ideals[m.img[bi]] == bfi)) {
        rep.status = AxiomReport::Status::fail;
        rep.witness = Witness{L.ideals[i], L.ideals[b], L.ideals[m.img[bi]],
                              bfi, "f(bI) differs from b f(I)"};
        return rep;
      }
    }
  if (rep.checked == 0) rep.status = AxiomReport::Status::no_instances;
  return rep;
}

}  // namespace

AxiomReport check_axiom(const RawMap& m, char which) {
  switch (which) {
    case 'a': return check_a(m);
    case 'b': return check_b(m);
    case 'c': return check_c(m);
    case 'd': return check_d(m);
    case 'e': return check_e(m);
  }
  throw std::invalid_argument("axiom tag must be one of a..e");
}

std::array<AxiomReport, 3> is_closure(const RawMap& m) {
  return {check_axiom(m, 'a'), check_axiom(m, 'b'), check_axiom(m, 'c')};
}

bool is_closure_ok(const RawMap& m) {
  auto reps = is_closure(m);
  return reps[0].ok() && reps[1].ok() && reps[2].ok();
}

bool is_semiprime_ok(const RawMap& m) {
  return is_closure_ok(m) && check_axiom(m, 'd').ok();
}

BoundWitness is_bounded(const RawMap& m) {
  const Lattice& L = *m.lat;
  for (int cand = 0; cand < L.size(); ++cand) {
    if (cand == L.zero_idx || cand == L.unit_idx) continue;
    int absorbed = 0;
    bool ok = true;
    for (int j = 0; j < L.size() && ok; ++j) {
      if (j == L.zero_idx || !L.leq(j, cand)) continue;
      if (m.img[j] != cand) ok = false;
      else ++absorbed;
    }
    if (ok && absorbed >= 2) return BoundWitness{true, L.ideals[cand], absorbed};
  }
  return BoundWitness{};
}

std::optional<Witness> prime_obstruction(const Window& w, const ClosureOp& op) {
  const Ring& r = w.ring;
  std::vector<Ideal> gens;
  switch (r.family) {
    case Family::dvr: gens.push_back(Ideal::dvr_pow(1)); break;
    case Family::ded:
      for (int k = 0; k < r.nprimes; ++k) {
        std::vector<int> e(r.nprimes, 0);
        e[k] = 1;
        gens.push_back(Ideal::ded(std::move(e)));
      }
      break;
    case Family::cusp:
      for (int i = 2; i <= w.D; ++i)
        for (int a = 0; a < r.p; ++a) gens.push_back(Ideal::cusp_p(i, a));
      break;
  }
  for (const Ideal& b : gens)
    for (const Ideal& I : enumerate_ideals(w)) {
      Ideal lhs = apply(r, op, product_exact(r, b, I));
      Ideal rhs = product_exact(r, b, apply(r, op, I));
      if (!(lhs == rhs))
        return Witness{I, b, lhs, rhs, "f(bI) differs from b f(I)"};
    }
  return std::nullopt;
}

}  // namespace idealops
