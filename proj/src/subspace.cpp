#include "idealops/subspace.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace idealops {

namespace {

int inv_mod(int a, int p) {
  a %= p;
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw std::logic_error("no inverse");
}

// in-place RREF; returns rank
int rref(std::vector<std::vector<uint8_t>>& m, int p) {
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(m.size()); ++i)
      if (m[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    int inv = inv_mod(m[r][c], p);
    for (int j = c; j < cols; ++j) m[r][j] = static_cast<uint8_t>(m[r][j] * inv % p);
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == r || m[i][c] == 0) continue;
      int f = m[i][c];
      for (int j = c; j < cols; ++j)
        m[i][j] = static_cast<uint8_t>(((m[i][j] - f * m[r][j]) % p + p) % p);
    }
    ++r;
  }
  m.resize(r);
  return r;
}

std::vector<uint8_t> truncated_shift(const std::vector<uint8_t>& v, int s, int D) {
  std::vector<uint8_t> out(D + 1, 0);
  for (int d = 0; d + s <= D; ++d) out[d + s] = v[d];
  return out;
}

}  // namespace

Subspace make_subspace(int p, int D, std::vector<std::vector<uint8_t>> gens) {
  for (auto& g : gens)
    if (static_cast<int>(g.size()) != D + 1)
      throw std::invalid_argument("generator has wrong column count");
  rref(gens, p);
  return Subspace{p, D, std::move(gens)};
}

Subspace to_subspace(const Ring& r, const Ideal& I, int D) {
  if (r.family != Family::cusp || I.fam != Family::cusp)
    throw std::invalid_argument("subspace oracle is for the cuspidal family");
  if (I.kind != Ideal::Kind::zero && D < window_rank(I) + 2)
    throw std::invalid_argument("truncation degree too small for this ideal");
  std::vector<std::vector<uint8_t>> gens;
  auto add_gen = [&](const std::vector<uint8_t>& g) {
    gens.push_back(truncated_shift(g, 0, D));
    for (int s = 2; s <= D; ++s) gens.push_back(truncated_shift(g, s, D));
  };
  std::vector<uint8_t> g(D + 1, 0);
  switch (I.kind) {
    case Ideal::Kind::zero: break;
    case Ideal::Kind::unit:
      g[0] = 1;
      add_gen(g);
      break;
    case Ideal::Kind::mtwo:
      g[I.deg] = 1;
      add_gen(g);
      g.assign(D + 1, 0);
      g[I.deg + 1] = 1;
      add_gen(g);
      break;
    case Ideal::Kind::prin:
      g[I.deg] = 1;
      g[I.deg + 1] = static_cast<uint8_t>(I.coef % r.p);
      add_gen(g);
      break;
    default:
      throw std::invalid_argument("not a cuspidal ideal");
  }
  return make_subspace(r.p, D, std::move(gens));
}

bool span_contains(const Subspace& outer, const Subspace& inner) {
  if (outer.p != inner.p || outer.D != inner.D)
    throw std::invalid_argument("subspace shape mismatch");
  // each inner row must reduce to zero against outer's RREF
  for (auto row : inner.rows) {
    for (const auto& orow : outer.rows) {
      int c = 0;
      while (orow[c] == 0) ++c;  // pivot column
      if (row[c] != 0) {
        int f = row[c];
        for (size_t j = 0; j < row.size(); ++j)
          row[j] = static_cast<uint8_t>(((row[j] - f * orow[j]) % outer.p + outer.p) % outer.p);
      }
    }
    for (uint8_t x : row)
      if (x != 0) return false;
  }
  return true;
}

Subspace span_product(const Subspace& a, const Subspace& b) {
  if (a.p != b.p || a.D != b.D)
    throw std::invalid_argument("subspace shape mismatch");
  const int p = a.p, D = a.D;
  std::vector<std::vector<uint8_t>> gens;
  for (const auto& x : a.rows)
    for (const auto& y : b.rows) {
      std::vector<uint8_t> prod(D + 1, 0);
      for (int i = 0; i <= D; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; i + j <= D; ++j)
          prod[i + j] = static_cast<uint8_t>((prod[i + j] + x[i] * y[j]) % p);
      }
      gens.push_back(std::move(prod));
    }
  return make_subspace(p, D, std::move(gens));
}

Subspace span_intersect(const Subspace& a, const Subspace& b) {
  if (a.p != b.p || a.D != b.D)
    throw std::invalid_argument("subspace shape mismatch");
  const int p = a.p, D = a.D, n = D + 1;
  // Zassenhaus: rows [u | u] for u in a, [v | 0] for v in b; after
  // elimination the rows with zero left half carry the intersection.
  std::vector<std::vector<uint8_t>> m;
  for (const auto& u : a.rows) {
    std::vector<uint8_t> row(2 * n, 0);
    for (int j = 0; j < n; ++j) row[j] = row[n + j] = u[j];
    m.push_back(std::move(row));
  }
  for (const auto& v : b.rows) {
    std::vector<uint8_t> row(2 * n, 0);
    for (int j = 0; j < n; ++j) row[j] = v[j];
    m.push_back(std::move(row));
  }
  rref(m, p);
  std::vector<std::vector<uint8_t>> inter;
  for (const auto& row : m) {
    bool left_zero = std::all_of(row.begin(), row.begin() + n,
                                 [](uint8_t x) { return x == 0; });
    if (left_zero)
      inter.emplace_back(row.begin() + n, row.end());
  }
  return make_subspace(p, D, std::move(inter));
}

Ideal identify_subspace(const Ring& r, const Subspace& s) {
  if (s.rows.empty()) return Ideal::cusp_zero();
  int lead = 0;
  while (s.rows[0][lead] == 0) ++lead;
  Ideal cand;
  if (lead == 0) {
    cand = Ideal::cusp_unit();
  } else if (s.rank() == s.D - lead + 1) {
    cand = Ideal::cusp_m(lead);
  } else {
    int a = s.rows[0][lead + 1];
    cand = Ideal::cusp_p(lead, a);
  }
  if (to_subspace(r, cand, s.D) != s)
    throw std::logic_error("subspace does not match any ideal form; basis:\n" +
                           to_string(s));
  return cand;
}

int colength(const Ring& r, const Ideal& J, const Ideal& I) {
  if (r.family != Family::cusp)
    throw std::invalid_argument("colength is implemented for the cuspidal family");
  if (J.is_zero() || I.is_zero())
    throw std::invalid_argument("colength needs nonzero ideals");
  if (!contains(I, J))
    throw std::invalid_argument("colength(J, I) needs J contained in I");
  int D = std::max(window_rank(I), window_rank(J)) + 2;
  return to_subspace(r, I, D).rank() - to_subspace(r, J, D).rank();
}

std::string to_string(const Subspace& s) {
  std::ostringstream os;
  for (const auto& row : s.rows) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) os << ' ';
      os << int(row[j]);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace idealops
