// Independent linear-algebra oracle for cuspidal ideal arithmetic: a
// truncated power-series ideal is represented as the row space of its
// coefficient vectors over F_p, one column per t-degree 0..D, kept in
// reduced row echelon form so equality is a plain comparison.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "idealops/ideal.hpp"

namespace idealops {

struct Subspace {
  int p = 2;
  int D = 0;
  // RREF rows, pivot degrees strictly increasing, no zero rows.
  std::vector<std::vector<uint8_t>> rows;

  int rank() const { return static_cast<int>(rows.size()); }
  bool operator==(const Subspace&) const = default;
};

// Reduce an arbitrary spanning set to canonical RREF.
Subspace make_subspace(int p, int D, std::vector<std::vector<uint8_t>> gens);

// Row space of { g * t^s truncated at D : s in {0,2,3,...,D} } for each
// generator g of the ideal.  Requires D >= window_rank(I) + 2 so the
// result determines the ideal.
Subspace to_subspace(const Ring& r, const Ideal& I, int D);

bool span_contains(const Subspace& outer, const Subspace& inner);
Subspace span_product(const Subspace& a, const Subspace& b);
Subspace span_intersect(const Subspace& a, const Subspace& b);

// Map a subspace back to the unique cuspidal ideal with that truncated
// row space.  Throws std::logic_error (with the offending basis in the
// message) if no ideal of the Prop-4.1 forms matches.
Ideal identify_subspace(const Ring& r, const Subspace& s);

// F_p-length of I/J (J contained in I, both nonzero), computed as a rank
// difference of oracle bases at a sufficient truncation.
int colength(const Ring& r, const Ideal& J, const Ideal& I);

// One row per basis vector, coefficients space-separated by ascending degree.
std::string to_string(const Subspace& s);

}  // namespace idealops
