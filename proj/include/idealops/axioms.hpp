// Checkers for the closure-operation properties on a window:
//   (a) extensive  (b) monotone  (c) idempotent
//   (d) f(I)f(J) inside f(IJ)   (e) f(bI) = b f(I) for principal generators
// Failures carry a re-checkable witness; out-of-window product instances
// are counted as skipped, and a check that executed nothing is not a pass.
#pragma once

#include <array>
#include <optional>
#include <string>

#include "idealops/lattice.hpp"
#include "idealops/ops.hpp"

namespace idealops {

struct Witness {
  Ideal x;                    // primary ideal of the failing instance
  std::optional<Ideal> y;     // second ideal (pairs) or generator (axiom e)
  Ideal got;
  Ideal want;
  std::string relation;       // human-readable statement of the violation
};

std::string to_string(const Witness& w);

struct AxiomReport {
  char axiom = '?';
  enum class Status { pass, fail, no_instances } status = Status::pass;
  int checked = 0;
  int skipped = 0;
  std::optional<Witness> witness;

  bool ok() const { return status == Status::pass; }
};

AxiomReport check_axiom(const RawMap& m, char which);  // 'a'..'e'

// conjunction of (a), (b), (c); first failure wins
std::array<AxiomReport, 3> is_closure(const RawMap& m);
bool is_closure_ok(const RawMap& m);
bool is_semiprime_ok(const RawMap& m);  // (a)-(d)

struct BoundWitness {
  bool bounded = false;
  Ideal floor;        // the absorbing ideal I0 when bounded
  int absorbed = 0;   // nonzero window ideals below I0 (>= 2 required)
};

// Def-2.4 style boundedness on the window: some I0 absorbs every nonzero
// window ideal below it, with at least two absorbed witnesses so the
// window floor cannot make the check vacuously true.
BoundWitness is_bounded(const RawMap& m);

// Exact (window-free) axiom-(e) scan for a family operation: evaluates
// f(bI) and b f(I) with closed-form arithmetic so witnesses just past the
// window boundary are not lost to truncation.
std::optional<Witness> prime_obstruction(const Window& w, const ClosureOp& op);

}  // namespace idealops
