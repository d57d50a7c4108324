// First-class closure-operation values for each ring family, their
// application formulas, the canonical text syntax, and the family sweep
// (every operation constructible against a given window).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "idealops/lattice.hpp"

namespace idealops {

// subset of F_p as a bitmask over {0..p-1}
struct FieldSet {
  uint16_t mask = 0;

  static FieldSet none() { return {}; }
  static FieldSet full(int p) { return {static_cast<uint16_t>((1u << p) - 1)}; }
  static FieldSet of(std::initializer_list<int> xs) {
    FieldSet s;
    for (int x : xs) s.mask = static_cast<uint16_t>(s.mask | (1u << x));
    return s;
  }
  bool has(int a) const { return (mask >> a) & 1; }
  bool empty() const { return mask == 0; }
  bool is_full(int p) const { return mask == full(p).mask; }
  FieldSet union_with(FieldSet o) const { return {static_cast<uint16_t>(mask | o.mask)}; }
  FieldSet complement(int p) const {
    return {static_cast<uint16_t>(full(p).mask & ~mask)};
  }
  int count() const { return __builtin_popcount(mask); }
  bool operator==(const FieldSet&) const = default;
};

std::string to_string(FieldSet s);

constexpr int kInf = -1;  // unbounded exponent in a Dedekind box

enum class ZeroRule : uint8_t {
  closed,  // (0) is closed
  target   // (0) maps to the operation's bound ideal
};

struct ClosureOp {
  enum class Kind : uint8_t {
    identity,
    dvr_f,        // P^i -> P^min(i,m), (0) closed
    dvr_g,        // P^i -> P^min(i,m), (0) -> P^m
    dvr_jump,     // P^i -> R for i < n, P^n for i >= n; closure, not semiprime
    ded_box,      // componentwise clamp to per-prime bounds
    cusp_int,     // unbounded: collapse P-levels from i on (S at i, T at i+1)
    cusp_int_single,  // collapse level i only; closure, not semiprime
    cusp_point,   // bounded, floor P(m,a)
    cusp_box      // bounded, floor M(m); regular or exceptional
  };

  Family fam = Family::dvr;
  Kind kind = Kind::identity;
  int m = 0;                  // bound level (dvr_f/g/jump uses m as well)
  int n = 0;                  // staircase start (cusp_box) / int level i
  int a = 0;                  // field element (cusp_point)
  FieldSet S, T;
  ZeroRule zero = ZeroRule::closed;
  bool exceptional = false;
  std::vector<int> bounds;    // ded_box; kInf entries are unbounded

  bool operator==(const ClosureOp&) const = default;
};

// validated constructors; throw std::invalid_argument on bad parameters
ClosureOp make_identity(Family fam);
ClosureOp make_dvr_f(int m);
ClosureOp make_dvr_g(int m);
ClosureOp make_dvr_jump(int n);
ClosureOp make_ded_box(const Ring& r, std::vector<int> bounds, ZeroRule zero);
ClosureOp make_cusp_int(const Ring& r, int i, FieldSet S, FieldSet T);
ClosureOp make_cusp_int_single(const Ring& r, int i);
ClosureOp make_cusp_point(const Ring& r, int m, int a, ZeroRule zero);
ClosureOp make_cusp_box(const Ring& r, int n, FieldSet S, FieldSet T, int m,
                        ZeroRule zero, bool exceptional);

// Parameter validity for a box without constructing (used by sweeps).
bool cusp_box_params_ok(const Ring& r, int n, FieldSet S, FieldSet T, int m,
                        bool exceptional);

bool is_semiprime_family(const ClosureOp& op);  // everything but jump/int_single

// exact application (window-free)
Ideal apply(const Ring& r, const ClosureOp& op, const Ideal& I);

// tabulate over a window; throws if some image leaves the window
RawMap to_raw(const ClosureOp& op, std::shared_ptr<const Lattice> lat);

// canonical text syntax, round-trip exact; see README for the grammar
std::string to_string(const ClosureOp& op);
ClosureOp parse_op(const Ring& r, const std::string& text);

// deterministic ordering used for canonical alias representatives
bool canonical_less(const ClosureOp& x, const ClosureOp& y);

// Every semiprime-family member tabulable on the window, canonical order.
// Bound levels are swept one step past D: those members still restrict to
// new window tables (everything further out aliases an included member).
std::vector<ClosureOp> family_members(const Window& w);

// The non-semiprime closure-operation families (jump / int_single).
std::vector<ClosureOp> closure_only_members(const Window& w);

}  // namespace idealops
