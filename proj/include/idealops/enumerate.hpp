// Brute-force discovery of every closure / semiprime operation on a
// truncated ideal lattice, with the classification diff that compares the
// findings against the operation-family catalog.
#pragma once

#include <functional>

#include "idealops/monoid.hpp"

namespace idealops {

struct EnumOptions {
  bool semiprime = false;       // propagate axiom (d) during the search
  bool lemma_pruning = false;   // constancy-propagation pruning (semiprime only)
  int guard = 40;               // refuse windows with more ideals than this
};

// Streams every map satisfying (a), (b), (c) on the window (and (d) when
// semiprime is set), each exactly once, in deterministic order.  The
// search assigns images largest-ideal-first so monotonicity and
// idempotence prune eagerly; returning false from the sink stops early.
void enumerate_closure_maps(std::shared_ptr<const Lattice> lat,
                            const EnumOptions& opts,
                            const std::function<bool(const RawMap&)>& sink);

std::vector<RawMap> enumerate_semiprime(std::shared_ptr<const Lattice> lat,
                                        bool lemma_pruning = true);

struct ClassificationDiff {
  std::vector<RawMap> found_unexpected;     // enumerated but not in catalog
  std::vector<ClosureOp> expected_missing;  // catalog table never enumerated
  std::vector<std::vector<ClosureOp>> aliased;  // catalog groups with >1 member

  bool empty() const {
    return found_unexpected.empty() && expected_missing.empty();
  }
};

ClassificationDiff match_classification(const std::vector<RawMap>& found,
                                        const Catalog& cat);

}  // namespace idealops
