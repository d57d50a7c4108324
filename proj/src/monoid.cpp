#include "idealops/monoid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "idealops/subspace.hpp"

namespace idealops {

Catalog build_catalog(std::shared_ptr<const Lattice> lat) {
  Catalog cat;
  cat.lat = lat;
  cat.ops = family_members(lat->w);
  for (size_t i = 0; i < cat.ops.size(); ++i) {
    cat.tables.push_back(to_raw(cat.ops[i], lat));
    auto [it, fresh] = cat.group_of_table.try_emplace(
        cat.tables.back().img, static_cast<int>(cat.groups.size()));
    if (fresh)
      cat.groups.push_back({static_cast<int>(i)});
    else
      cat.groups[it->second].push_back(static_cast<int>(i));
  }
  return cat;
}

std::string to_string(const ClassifiedResult& c) {
  std::ostringstream os;
  switch (c.kind) {
    case ClassifiedResult::Kind::op:
      os << "Op(" << to_string(*c.op) << ")";
      break;
    case ClassifiedResult::Kind::not_closure:
      os << "NotClosure(" << c.failed_axiom;
      if (c.witness) os << "; " << to_string(*c.witness);
      os << ")";
      break;
    case ClassifiedResult::Kind::not_semiprime:
      os << "NotSemiprime(";
      if (c.witness) os << to_string(*c.witness);
      os << ")";
      break;
    case ClassifiedResult::Kind::unknown_in_window:
      os << "UnknownInWindow";
      break;
  }
  return os.str();
}

bool same_outcome(const ClassifiedResult& c, const ClassifiedResult& d) {
  if (c.kind != d.kind) return false;
  if (c.kind == ClassifiedResult::Kind::op) return *c.op == *d.op;
  return true;
}

ClassifiedResult classify(const RawMap& m, const Catalog& cat) {
  ClassifiedResult res;
  for (char ax : {'a', 'b', 'c'}) {
    AxiomReport rep = check_axiom(m, ax);
    if (!rep.ok()) {
      res.kind = ClassifiedResult::Kind::not_closure;
      res.failed_axiom = ax;
      res.witness = rep.witness;
      return res;
    }
  }
  AxiomReport d = check_axiom(m, 'd');
  if (!d.ok()) {
    res.kind = ClassifiedResult::Kind::not_semiprime;
    res.failed_axiom = 'd';
    res.witness = d.witness;
    return res;
  }
  auto it = cat.group_of_table.find(m.img);
  if (it == cat.group_of_table.end()) {
    res.kind = ClassifiedResult::Kind::unknown_in_window;
    return res;
  }
  res.kind = ClassifiedResult::Kind::op;
  res.op = cat.head(it->second);
  for (int idx : cat.groups[it->second]) res.aliases.push_back(cat.ops[idx]);
  return res;
}

RawMap compose(const ClosureOp& f, const ClosureOp& g,
               std::shared_ptr<const Lattice> lat) {
  return compose(to_raw(f, lat), to_raw(g, std::move(lat)));
}

namespace {

std::optional<Ideal> bound_floor(const ClosureOp& op) {
  switch (op.kind) {
    case ClosureOp::Kind::cusp_point:
      return Ideal::cusp_p(op.m, op.a);
    case ClosureOp::Kind::cusp_box:
      return Ideal::cusp_m(op.m);
    case ClosureOp::Kind::dvr_f:
    case ClosureOp::Kind::dvr_g:
      return Ideal::dvr_pow(op.m);
    default:
      return std::nullopt;
  }
}

bool incomparable(const Ideal& x, const Ideal& y) {
  return !contains(x, y) && !contains(y, x);
}

// all cuspidal ideals c with lo <= c <= hi (inclusive), by containment
std::vector<Ideal> between(const Ring& r, const Ideal& lo, const Ideal& hi) {
  std::vector<Ideal> out;
  int dmax = window_rank(lo) + 1;
  std::vector<Ideal> all;
  all.push_back(Ideal::cusp_unit());
  for (int i = 2; i <= dmax; ++i) {
    all.push_back(Ideal::cusp_m(i));
    for (int a = 0; a < r.p; ++a) all.push_back(Ideal::cusp_p(i, a));
  }
  for (const Ideal& c : all)
    if (contains(c, lo) && contains(hi, c)) out.push_back(c);
  return out;
}

bool chain_search(const Ring& r, const Ideal& floor,
                  const std::vector<Ideal>& pool, const Ideal& cur,
                  const Ideal& top, std::vector<Ideal>& chain) {
  if (cur == top) return true;
  for (const Ideal& next : pool) {
    if (next == cur || !contains(next, cur) || !contains(top, next)) continue;
    if (colength(r, cur, next) != 1) continue;
    if (!contains(next, floor)) continue;  // intermediates must contain J
    chain.push_back(next);
    if (chain_search(r, floor, pool, next, top, chain)) return true;
    chain.pop_back();
  }
  return false;
}

}  // namespace

ExceptionalWitness is_exceptional(const Window& w, const ClosureOp& op) {
  ExceptionalWitness res;
  if (w.ring.family != Family::cusp) return res;
  auto floor = bound_floor(op);
  if (!floor) return res;
  res.floor = *floor;
  for (const Ideal& a : enumerate_ideals(w)) {
    if (a.is_zero() || !incomparable(a, *floor)) continue;
    Ideal fa = apply(w.ring, op, a);
    if (!contains(fa, *floor)) continue;
    if (colength(w.ring, a, fa) < 2) continue;
    std::vector<Ideal> pool = between(w.ring, a, fa);
    std::vector<Ideal> chain{a};
    if (chain_search(w.ring, *floor, pool, a, fa, chain)) {
      res.exceptional = true;
      res.chain = chain;
      return res;
    }
  }
  return res;
}

Report noncommutativity_witnesses(const Window& w) {
  Report rep;
  if (w.ring.family != Family::cusp) return rep;
  const Ring& r = w.ring;
  FieldSet K = FieldSet::full(r.p);
  auto eval_pair = [&](const std::string& id, const ClosureOp& x,
                       const ClosureOp& y, const Ideal& at, const Ideal& want_xy,
                       const Ideal& want_yx) {
    Ideal got_xy = apply(r, x, apply(r, y, at));
    Ideal got_yx = apply(r, y, apply(r, x, at));
    CheckRecord rec;
    rec.suite = "exceptional";
    rec.id = id;
    rec.params = to_string(x) + " vs " + to_string(y) + " at " + to_string(at);
    rec.expected = "(" + to_string(want_xy) + ", " + to_string(want_yx) + ")";
    rec.got = "(" + to_string(got_xy) + ", " + to_string(got_yx) + ")";
    rec.status = (got_xy == want_xy && got_yx == want_yx && !(got_xy == got_yx))
                     ? CheckStatus::pass
                     : CheckStatus::fail;
    rec.checked = 2;
    rep.add(rec);
  };
  if (w.D < 6) {
    CheckRecord rec;
    rec.suite = "exceptional";
    rec.id = "noncommuting-pairs";
    rec.expected = "window with D >= 6";
    rec.status = CheckStatus::not_instantiable;
    rep.add(rec);
    return rep;
  }
  const int m = 6;
  ClosureOp excm = make_cusp_box(r, 2, K, K, m, ZeroRule::closed, true);
  ClosureOp excm1 = make_cusp_box(r, 2, K, K, m - 1, ZeroRule::closed, true);
  eval_pair("exc-box-pair", excm, excm1, Ideal::cusp_m(m),
            Ideal::cusp_m(m - 2), Ideal::cusp_m(m - 1));
  ClosureOp fp = make_cusp_point(r, m - 1, 0, ZeroRule::closed);
  eval_pair("exc-box-vs-point", excm, fp, Ideal::cusp_m(m + 1),
            Ideal::cusp_m(m - 2), Ideal::cusp_m(m - 1));
  // identity commutes with everything (sample across the families)
  ClosureOp e = make_identity(Family::cusp);
  bool id_ok = true;
  for (const ClosureOp& x : {excm, excm1, fp})
    for (const Ideal& I : enumerate_ideals(w))
      if (!(apply(r, x, apply(r, e, I)) == apply(r, e, apply(r, x, I))))
        id_ok = false;
  CheckRecord rec;
  rec.suite = "exceptional";
  rec.id = "identity-commutes";
  rec.expected = "e commutes with every operation";
  rec.got = id_ok ? "commutes" : "counterexample found";
  rec.status = id_ok ? CheckStatus::pass : CheckStatus::fail;
  rep.add(rec);
  return rep;
}

std::vector<PrimeScanEntry> prime_scan(const Window& w) {
  std::vector<PrimeScanEntry> out;
  for (const ClosureOp& op : family_members(w))
    out.push_back(PrimeScanEntry{op, prime_obstruction(w, op)});
  return out;
}

bool point_floor_conflict(const Window& w, const ClosureOp& second,
                          const ClosureOp& first) {
  if (second.kind != ClosureOp::Kind::cusp_point) return false;
  Ideal floor = Ideal::cusp_p(second.m, second.a);
  if (apply(w.ring, first, floor) == floor) return false;
  for (const Ideal& y : enumerate_ideals(w)) {
    Ideal fy = apply(w.ring, first, y);
    if (!fy.is_zero() && contains(floor, fy)) return true;
  }
  return false;
}

namespace {

bool in_m0(const ClosureOp& op) {
  if (op.kind == ClosureOp::Kind::identity) return true;
  if (!is_semiprime_family(op) || op.exceptional) return false;
  return op.zero == ZeroRule::closed;
}

bool in_mf(const ClosureOp& op) {
  if (op.kind == ClosureOp::Kind::identity) return true;
  if (!is_semiprime_family(op) || op.exceptional) return false;
  return op.zero == ZeroRule::target;
}

}  // namespace

Report verify_act_structure(const Window& w) {
  Report rep;
  auto lat = build_lattice(w);
  Catalog cat = build_catalog(lat);
  // distinct window tables only; aliases compose identically
  std::vector<int> m0, mf;
  for (const auto& grp : cat.groups) {
    const ClosureOp& head = cat.ops[grp[0]];
    if (head.exceptional) continue;
    if (in_m0(head)) m0.push_back(grp[0]);
    if (in_mf(head)) mf.push_back(grp[0]);
  }
  auto run_pairs = [&](const std::string& id, const std::vector<int>& lhs,
                       const std::vector<int>& rhs, auto member_ok) {
    int pass = 0, errata = 0;
    std::string first_err, first_fail;
    bool failed = false;
    for (int i : lhs)
      for (int j : rhs) {
        RawMap c = compose(cat.tables[i], cat.tables[j]);
        ClassifiedResult res = classify(c, cat);
        bool ok = res.kind == ClassifiedResult::Kind::op && member_ok(*res.op);
        if (ok) {
          ++pass;
          continue;
        }
        if (point_floor_conflict(w, cat.ops[i], cat.ops[j]) &&
            res.kind == ClassifiedResult::Kind::not_closure) {
          ++errata;
          if (first_err.empty())
            first_err = to_string(cat.ops[i]) + " after " + to_string(cat.ops[j]) +
                        " -> " + to_string(res);
          continue;
        }
        failed = true;
        if (first_fail.empty())
          first_fail = to_string(cat.ops[i]) + " after " + to_string(cat.ops[j]) +
                       " -> " + to_string(res);
      }
    CheckRecord rec;
    rec.suite = "act";
    rec.id = id;
    rec.checked = pass + errata;
    rec.params = "pairs=" + std::to_string(lhs.size() * rhs.size());
    rec.expected = "every composition stays in the monoid/act";
    if (failed) {
      rec.status = CheckStatus::fail;
      rec.got = "unexpected composition failure";
      rec.witness = first_fail;
    } else if (errata > 0) {
      rec.status = CheckStatus::finding;
      rec.got = std::to_string(pass) + " pass, " + std::to_string(errata) +
                " point-floor conflicts (source text overstates closure)";
      rec.witness = first_err;
    } else {
      rec.got = "all " + std::to_string(pass) + " compositions stay inside";
    }
    rep.add(rec);
  };
  run_pairs("M0-closed-under-composition", m0, m0, in_m0);
  run_pairs("Mf-closed-under-composition", mf, mf, in_mf);
  run_pairs("left-act-f-after-g", m0, mf, in_mf);

  // act associativity: (s.t).a == s.(t.a) as tables, sampled deterministically
  {
    auto take = [](const std::vector<int>& v, size_t k) {
      return std::vector<int>(v.begin(), v.begin() + std::min(k, v.size()));
    };
    std::vector<int> sm0 = take(m0, 10), smf = take(mf, 10);
    bool ok = true;
    std::string wit;
    for (int i : sm0)
      for (int j : sm0)
        for (int k : smf) {
          RawMap st = compose(cat.tables[i], cat.tables[j]);
          RawMap lhs = compose(st, cat.tables[k]);
          RawMap rhs = compose(cat.tables[i], compose(cat.tables[j], cat.tables[k]));
          if (!(lhs == rhs)) {
            ok = false;
            if (wit.empty())
              wit = to_string(cat.ops[i]) + ", " + to_string(cat.ops[j]) + ", " +
                    to_string(cat.ops[k]);
          }
        }
    CheckRecord rec;
    rec.suite = "act";
    rec.id = "act-associativity";
    rec.expected = "(s.t).a == s.(t.a)";
    rec.got = ok ? "holds on the sampled triples" : "violated";
    rec.status = ok ? CheckStatus::pass : CheckStatus::fail;
    rec.witness = wit;
    rep.add(rec);
  }

  // right-act failure: some g.f (f applied first) is not a closure operation
  {
    std::optional<std::string> wit;
    for (int j : mf) {
      if (wit) break;
      if (cat.ops[j].kind == ClosureOp::Kind::identity) continue;
      for (int i : m0) {
        RawMap c = compose(cat.tables[j], cat.tables[i]);  // g after f
        ClassifiedResult res = classify(c, cat);
        if (res.kind == ClassifiedResult::Kind::not_closure) {
          wit = to_string(cat.ops[j]) + " after " + to_string(cat.ops[i]) +
                " -> " + to_string(res);
          break;
        }
      }
    }
    CheckRecord rec;
    rec.suite = "act";
    rec.id = "right-act-failure-witness";
    rec.expected = "some g.f fails to be a closure operation";
    rec.got = wit ? "witness found" : "no witness";
    rec.witness = wit.value_or("");
    rec.status = wit ? CheckStatus::pass : CheckStatus::fail;
    rep.add(rec);
  }
  return rep;
}

}  // namespace idealops
