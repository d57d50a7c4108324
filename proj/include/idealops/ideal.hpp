// Ideal lattices of three commutative-ring models:
//  - dvr:  a discrete valuation ring (R, P); ideals P^i for i >= 0 and (0)
//  - ded:  a Dedekind domain with finitely many maximal ideals P_1..P_k;
//          nonzero ideals are exponent vectors
//  - cusp: the cuspidal cubic F_p[[t^2,t^3]]; nonzero proper ideals are
//          M(i) = (t^i, t^{i+1}) or P(i,a) = (t^i + a t^{i+1}), i >= 2
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace idealops {

enum class Family : uint8_t { dvr, ded, cusp };

std::string to_string(Family f);

// Ring instance: the family plus per-instance parameters.
// p is the field characteristic (cusp only), nprimes = |Lambda| (ded only).
struct Ring {
  Family family = Family::dvr;
  int p = 0;
  int nprimes = 0;

  bool operator==(const Ring&) const = default;
};

Ring dvr_ring();
Ring ded_ring(int nprimes);
Ring cusp_ring(int p);

// Finite truncation of the (infinite) ideal lattice: ideals of
// degree/exponent <= D, plus the unit and zero ideals.
struct Window {
  Ring ring;
  int D = 0;

  bool operator==(const Window&) const = default;
};

Window dvr_window(int D);
Window ded_window(int nprimes, int D);
Window cusp_window(int p, int D);

struct Ideal {
  enum class Kind : uint8_t {
    dvr_pow,   // P^deg, deg >= 0 (deg == 0 is the unit ideal R)
    ded_exps,  // prod P_i^{exps[i]} (all zero is R)
    unit,      // cusp unit ideal R
    mtwo,      // cusp M(deg) = (t^deg, t^{deg+1}), deg >= 2
    prin,      // cusp P(deg, coef) = (t^deg + coef*t^{deg+1}), deg >= 2
    zero       // (0), any family
  };

  Family fam = Family::dvr;
  Kind kind = Kind::zero;
  int deg = 0;
  int coef = 0;
  std::vector<int> exps;

  bool operator==(const Ideal&) const = default;

  static Ideal dvr_pow(int n);
  static Ideal dvr_zero();
  static Ideal ded(std::vector<int> exps);
  static Ideal ded_unit(int nprimes);
  static Ideal ded_zero();
  static Ideal cusp_unit();
  static Ideal cusp_m(int i);
  static Ideal cusp_p(int i, int a);
  static Ideal cusp_zero();

  bool is_zero() const { return kind == Kind::zero; }
  bool is_unit() const;
};

std::string to_string(const Ideal& I);

// Window rank used for truncation: the largest exponent/degree appearing.
// Unit ideals have rank 0; zero has rank 0 by convention (always in window).
int window_rank(const Ideal& I);
bool in_window(const Window& w, const Ideal& I);

// true iff J is contained in I.  Throws std::invalid_argument on mixed
// families.  Cuspidal rules follow the containment lattice of M(i)/P(i,a)
// and are cross-checked against the Subspace oracle in the test suites.
bool contains(const Ideal& I, const Ideal& J);

// Exact ideal product (never truncates; degrees may exceed any window).
Ideal product_exact(const Ring& r, const Ideal& I, const Ideal& J);

// Windowed product: nullopt signals that the result falls outside the
// window (callers skip that check instance rather than truncating).
std::optional<Ideal> product(const Window& w, const Ideal& I, const Ideal& J);

// Largest ideal contained in both.  Total: intersections of representable
// ideals are representable in all three families.
Ideal intersect(const Ideal& I, const Ideal& J);

// Cuspidal integral closure: P(i,a) -> M(i); everything else fixed.
Ideal integral_closure(const Ideal& I);

// All ideals of the family with window rank <= D, in the deterministic
// report order: unit first, ascending degree (M before P at equal degree,
// P ordered by field element), zero last.
std::vector<Ideal> enumerate_ideals(const Window& w);

}  // namespace idealops
