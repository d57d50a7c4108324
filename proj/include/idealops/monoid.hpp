// Composition, classification back into the operation families, bounded /
// exceptional detection, act-structure checks and prime scans.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "idealops/axioms.hpp"
#include "idealops/lattice.hpp"
#include "idealops/ops.hpp"
#include "idealops/report.hpp"

namespace idealops {

// Window sweep of every constructible family member, grouped by table so
// that operations indistinguishable inside the window (window aliasing)
// share a group.  Group order follows the canonical op order of the head.
struct Catalog {
  std::shared_ptr<const Lattice> lat;
  std::vector<ClosureOp> ops;            // canonical order
  std::vector<RawMap> tables;            // tables[i] = to_raw(ops[i])
  std::map<std::vector<int16_t>, int> group_of_table;
  std::vector<std::vector<int>> groups;  // op indices, head first

  const ClosureOp& head(int group) const { return ops[groups[group][0]]; }
};

Catalog build_catalog(std::shared_ptr<const Lattice> lat);

struct ClassifiedResult {
  enum class Kind { op, not_closure, not_semiprime, unknown_in_window };
  Kind kind = Kind::unknown_in_window;
  std::optional<ClosureOp> op;       // canonical representative
  std::vector<ClosureOp> aliases;    // whole alias group when matched
  char failed_axiom = '?';
  std::optional<Witness> witness;
};

std::string to_string(const ClassifiedResult& c);
bool same_outcome(const ClassifiedResult& c, const ClassifiedResult& d);

ClassifiedResult classify(const RawMap& m, const Catalog& cat);

RawMap compose(const ClosureOp& f, const ClosureOp& g,
               std::shared_ptr<const Lattice> lat);

struct ExceptionalWitness {
  bool exceptional = false;
  Ideal floor;                 // J of the definition
  std::vector<Ideal> chain;    // composition series from a to f(a)
};

// Detects a composition series of length >= 2 (the conductor of <2,3>)
// from an ideal incomparable to the bound floor into its closure, with
// every intermediate term containing the floor.
ExceptionalWitness is_exceptional(const Window& w, const ClosureOp& op);

// The two displayed non-commuting pairs built from exceptional boxes;
// returns one record per pair with the (M(m-2), M(m-1)) values.
Report noncommutativity_witnesses(const Window& w);

struct PrimeScanEntry {
  ClosureOp op;
  std::optional<Witness> obstruction;  // empty iff the op passed axiom (e)
};

// Every in-window family member with its axiom-(e) verdict; the survivors
// (no obstruction) are the prime operations found in the window.
std::vector<PrimeScanEntry> prime_scan(const Window& w);

// Monoid / left-act structure verification over all in-window pairs.
// Composition cells where the computed result contradicts the source
// text's closure claims are reported as findings when they match the
// documented erratum list, and as failures otherwise.
Report verify_act_structure(const Window& w);

// True when composing `second` after `first` destroys a point floor:
// `second` absorbs some ideal into its floor P(m,a) while `first` moves
// P(m,a) itself, so the composition cannot be idempotent.
bool point_floor_conflict(const Window& w, const ClosureOp& second,
                          const ClosureOp& first);

}  // namespace idealops
