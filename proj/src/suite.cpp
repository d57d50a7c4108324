#include "idealops/suite.hpp"

#include <algorithm>
#include <sstream>

#include "idealops/axioms.hpp"
#include "idealops/enumerate.hpp"
#include "idealops/monoid.hpp"
#include "idealops/subspace.hpp"
#include "idealops/tables.hpp"

namespace idealops {

namespace {

CheckRecord make_rec(std::string suite, std::string id, CheckStatus st,
                     std::string expected, std::string got,
                     std::string witness = "", int checked = 0,
                     int skipped = 0) {
  CheckRecord r;
  r.suite = std::move(suite);
  r.id = std::move(id);
  r.status = st;
  r.expected = std::move(expected);
  r.got = std::move(got);
  r.witness = std::move(witness);
  r.checked = checked;
  r.skipped = skipped;
  return r;
}

struct Agg {
  int checked = 0;
  int failed = 0;
  int skipped = 0;
  std::string first;

  void fail(const std::string& w) {
    ++failed;
    if (first.empty()) first = w;
  }
  CheckRecord rec(const std::string& suite, const std::string& id,
                  const std::string& expected) const {
    return make_rec(suite, id, failed ? CheckStatus::fail : CheckStatus::pass,
                    expected,
                    failed ? std::to_string(failed) + " of " +
                                 std::to_string(checked) + " instances failed"
                           : "all " + std::to_string(checked) + " instances agree",
                    first, checked, skipped);
  }
};

}  // namespace

std::vector<std::string> suite_names() {
  return {"oracle", "axioms",     "tables",      "act",
          "enumeration", "prime-scan", "exceptional"};
}

Report run_oracle_suite(const Window& w) {
  Report rep;
  if (w.ring.family != Family::cusp) {
    rep.add(make_rec("oracle", "subspace-oracle", CheckStatus::not_instantiable,
                     "cuspidal family only", ""));
    return rep;
  }
  const Ring& r = w.ring;
  const int D = w.D + 4;  // room to identify every pairwise intersection
  auto ideals = enumerate_ideals(w);
  // enumeration count: 2 + (D-1)(p+1)
  {
    int want = 2 + (w.D - 1) * (r.p + 1);
    rep.add(make_rec("oracle", "ideal-count",
                     static_cast<int>(ideals.size()) == want
                         ? CheckStatus::pass
                         : CheckStatus::fail,
                     std::to_string(want), std::to_string(ideals.size())));
  }
  std::vector<Subspace> spans;
  spans.reserve(ideals.size());
  for (const Ideal& I : ideals) spans.push_back(to_subspace(r, I, D));
  Agg contains_a, product_a, intersect_a, identify_a;
  for (size_t i = 0; i < ideals.size(); ++i) {
    // round trip through the oracle representation
    ++identify_a.checked;
    try {
      if (!(identify_subspace(r, spans[i]) == ideals[i]))
        identify_a.fail(to_string(ideals[i]));
    } catch (const std::exception& e) {
      identify_a.fail(e.what());
    }
    for (size_t j = 0; j < ideals.size(); ++j) {
      ++contains_a.checked;
      bool typed = contains(ideals[i], ideals[j]);
      bool oracle = span_contains(spans[i], spans[j]);
      if (typed != oracle)
        contains_a.fail("contains(" + to_string(ideals[i]) + ", " +
                        to_string(ideals[j]) + "): typed " +
                        (typed ? "true" : "false"));
      if (j >= i) {
        auto prod = product(w, ideals[i], ideals[j]);
        if (!prod) {
          ++product_a.skipped;
        } else {
          ++product_a.checked;
          try {
            Ideal got = identify_subspace(r, span_product(spans[i], spans[j]));
            if (!(got == *prod))
              product_a.fail(to_string(ideals[i]) + " * " + to_string(ideals[j]) +
                             ": typed " + to_string(*prod) + ", oracle " +
                             to_string(got));
          } catch (const std::exception& e) {
            product_a.fail(e.what());
          }
        }
        ++intersect_a.checked;
        try {
          Ideal want = intersect(ideals[i], ideals[j]);
          Ideal got = identify_subspace(r, span_intersect(spans[i], spans[j]));
          if (!(got == want))
            intersect_a.fail(to_string(ideals[i]) + " ^ " + to_string(ideals[j]) +
                             ": typed " + to_string(want) + ", oracle " +
                             to_string(got));
        } catch (const std::exception& e) {
          intersect_a.fail(e.what());
        }
      }
    }
  }
  rep.add(identify_a.rec("oracle", "identify-roundtrip",
                         "every window ideal round-trips through its basis"));
  rep.add(contains_a.rec("oracle", "contains-vs-oracle",
                         "typed containment equals row-space containment"));
  rep.add(product_a.rec("oracle", "product-vs-oracle",
                        "typed product equals the span of pairwise products"));
  rep.add(intersect_a.rec("oracle", "intersect-vs-oracle",
                          "typed intersection equals the subspace intersection"));
  return rep;
}

namespace {

// honest boundedness expectation for a family member on this window;
// nullopt when the floor sits too close to the boundary to decide
std::optional<bool> expected_bounded(const Window& w, const ClosureOp& op) {
  switch (op.kind) {
    case ClosureOp::Kind::identity: return false;
    case ClosureOp::Kind::cusp_int: return false;
    case ClosureOp::Kind::cusp_int_single: return false;
    case ClosureOp::Kind::dvr_f:
    case ClosureOp::Kind::dvr_g:
    case ClosureOp::Kind::dvr_jump:
      if (op.m <= w.D - 1) return true;
      return std::nullopt;
    case ClosureOp::Kind::ded_box: {
      bool all_finite = true, below = false;
      for (int b : op.bounds) {
        if (b == kInf) all_finite = false;
        else if (b <= w.D - 1) below = true;
      }
      if (all_finite && below) return true;
      if (!all_finite) return false;
      return std::nullopt;
    }
    case ClosureOp::Kind::cusp_point:
      if (op.m <= w.D - 2) return true;
      return std::nullopt;
    case ClosureOp::Kind::cusp_box:
      if (op.m <= w.D) return true;
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

Report run_axiom_suite(const Window& w) {
  Report rep;
  auto lat = build_lattice(w);
  Catalog cat = build_catalog(lat);
  std::vector<ClosureOp> members = family_members(w);
  std::vector<ClosureOp> extras = closure_only_members(w);
  Agg closure_a, semiprime_a, notsemi_a, prime_a, idem_a, round_a, bounded_a;
  for (const ClosureOp& op : members) {
    RawMap m = to_raw(op, lat);
    ++closure_a.checked;
    if (!is_closure_ok(m)) closure_a.fail(to_string(op));
    ++semiprime_a.checked;
    AxiomReport d = check_axiom(m, 'd');
    semiprime_a.skipped += d.skipped;
    if (!d.ok())
      semiprime_a.fail(to_string(op) + ": " + to_string(*d.witness));
    ++prime_a.checked;
    auto obstruction = prime_obstruction(w, op);
    bool is_e = op.kind == ClosureOp::Kind::identity;
    if (is_e && obstruction)
      prime_a.fail("identity: " + to_string(*obstruction));
    if (!is_e && !obstruction)
      prime_a.fail(to_string(op) + " passes (e) but is not the identity");
    ++idem_a.checked;
    for (const Ideal& I : lat->ideals) {
      Ideal once = apply(w.ring, op, I);
      if (!(apply(w.ring, op, once) == once)) {
        idem_a.fail(to_string(op) + " at " + to_string(I));
        break;
      }
    }
    ++round_a.checked;
    ClassifiedResult cls = classify(m, cat);
    bool found = cls.kind == ClassifiedResult::Kind::op &&
                 std::find(cls.aliases.begin(), cls.aliases.end(), op) !=
                     cls.aliases.end();
    if (!found) round_a.fail(to_string(op));
    if (auto want = expected_bounded(w, op)) {
      ++bounded_a.checked;
      BoundWitness b = is_bounded(m);
      if (b.bounded != *want)
        bounded_a.fail(to_string(op) +
                       (b.bounded ? ": bounded unexpectedly" : ": not bounded"));
    } else {
      ++bounded_a.skipped;
    }
  }
  for (const ClosureOp& op : extras) {
    RawMap m = to_raw(op, lat);
    ++closure_a.checked;
    if (!is_closure_ok(m)) closure_a.fail(to_string(op));
    ++notsemi_a.checked;
    AxiomReport d = check_axiom(m, 'd');
    if (d.ok())
      notsemi_a.fail(to_string(op) + " unexpectedly satisfies (d)");
  }
  rep.add(closure_a.rec("axioms", "family-is-closure",
                        "every family member passes (a)(b)(c)"));
  rep.add(semiprime_a.rec("axioms", "family-is-semiprime",
                          "every semiprime-family member passes (d)"));
  rep.add(notsemi_a.rec("axioms", "jump-and-intsingle-fail-d",
                        "the non-semiprime closure families fail (d)"));
  rep.add(prime_a.rec("axioms", "e-obstruction-scan",
                      "axiom (e) holds exactly for the identity"));
  rep.add(idem_a.rec("axioms", "apply-idempotent",
                     "apply(op, apply(op, I)) == apply(op, I)"));
  rep.add(round_a.rec("axioms", "classify-roundtrip",
                      "classify(to_raw(op)) recovers the operation"));
  rep.add(bounded_a.rec("axioms", "boundedness",
                        "window boundedness matches the family expectation"));
  return rep;
}

Report run_enumeration_suite(const Window& w) {
  Report rep;
  auto lat = build_lattice(w);
  Catalog cat = build_catalog(lat);
  std::vector<RawMap> found = enumerate_semiprime(lat, true);
  std::vector<RawMap> unpruned = enumerate_semiprime(lat, false);
  rep.add(make_rec("enumeration", "lemma-pruning-validated",
                   found == unpruned ? CheckStatus::pass : CheckStatus::fail,
                   "pruned and unpruned searches agree",
                   "pruned " + std::to_string(found.size()) + ", unpruned " +
                       std::to_string(unpruned.size()),
                   "", static_cast<int>(found.size())));
  Agg sound;
  for (const RawMap& m : found) {
    ++sound.checked;
    if (!is_semiprime_ok(m)) sound.fail(to_string(m));
  }
  rep.add(sound.rec("enumeration", "soundness",
                    "every enumerated map re-passes the axiom checkers"));
  ClassificationDiff diff = match_classification(found, cat);
  rep.add(make_rec(
      "enumeration", "diff-found-unexpected",
      diff.found_unexpected.empty() ? CheckStatus::pass : CheckStatus::fail,
      "every enumerated semiprime map matches a catalog member",
      diff.found_unexpected.empty()
          ? "all " + std::to_string(found.size()) + " maps matched"
          : std::to_string(diff.found_unexpected.size()) + " unmatched maps",
      diff.found_unexpected.empty() ? ""
                                    : to_string(diff.found_unexpected.front()),
      static_cast<int>(found.size())));
  rep.add(make_rec(
      "enumeration", "diff-expected-missing",
      diff.expected_missing.empty() ? CheckStatus::pass : CheckStatus::fail,
      "every catalog table is realized by an enumerated map",
      diff.expected_missing.empty()
          ? "all " + std::to_string(cat.groups.size()) + " tables realized"
          : std::to_string(diff.expected_missing.size()) + " missing",
      diff.expected_missing.empty() ? ""
                                    : to_string(diff.expected_missing.front())));
  {
    std::ostringstream os;
    for (size_t i = 0; i < std::min<size_t>(diff.aliased.size(), 3); ++i) {
      if (i) os << " | ";
      for (size_t j = 0; j < diff.aliased[i].size(); ++j)
        os << (j ? " ~ " : "") << to_string(diff.aliased[i][j]);
    }
    rep.add(make_rec("enumeration", "window-aliasing", CheckStatus::pass,
                     "operations indistinguishable inside the window",
                     std::to_string(diff.aliased.size()) + " alias groups",
                     os.str()));
  }
  // zero dichotomy: f(0) is (0) or the map's bound floor
  Agg zero_a;
  for (const RawMap& m : found) {
    ++zero_a.checked;
    int z = lat->zero_idx;
    if (m.img[z] == z) continue;
    BoundWitness b = is_bounded(m);
    if (!b.bounded || !(lat->ideals[m.img[z]] == b.floor))
      zero_a.fail(to_string(m));
  }
  rep.add(zero_a.rec("enumeration", "zero-dichotomy",
                     "f(0) is (0) or the absorbing floor"));
  // boundedness / constancy propagation over the enumerated maps
  Agg prop_a;
  if (w.ring.family == Family::cusp) {
    for (const RawMap& m : found) {
      bool pattern = false;
      for (int j = 2; j + 1 <= w.D && !pattern; ++j) {
        int mj = lat->index_of(Ideal::cusp_m(j));
        int mj1 = j + 1 <= w.D ? lat->index_of(Ideal::cusp_m(j + 1)) : -1;
        int mj2 = j + 2 <= w.D ? lat->index_of(Ideal::cusp_m(j + 2)) : -1;
        if (mj1 >= 0 && m.img[mj] == m.img[mj1]) pattern = true;
        if (mj2 >= 0 && m.img[mj] == m.img[mj2]) pattern = true;
        if (j >= 4)
          for (int a = 0; a < w.ring.p && !pattern; ++a) {
            int pj = lat->index_of(Ideal::cusp_p(j - 2, a));
            if (pj >= 0 && m.img[mj] == m.img[pj]) pattern = true;
          }
      }
      if (!pattern) continue;
      ++prop_a.checked;
      if (!is_bounded(m).bounded)
        prop_a.fail(to_string(m));
    }
    rep.add(prop_a.rec("enumeration", "bounded-propagation",
                       "a constancy pattern on the M-chain forces boundedness"));
  } else if (w.ring.family == Family::dvr) {
    for (const RawMap& m : found) {
      for (int i = 0; i + 1 <= w.D; ++i) {
        if (m.img[i] != m.img[i + 1]) continue;
        ++prop_a.checked;
        bool ok = true;
        for (int k = i + 1; k <= w.D; ++k)
          if (m.img[k] != m.img[i]) ok = false;
        if (!ok) {
          prop_a.fail(to_string(m));
          break;
        }
      }
    }
    rep.add(prop_a.rec("enumeration", "constancy-propagation",
                       "equal images on consecutive powers propagate down"));
  }
  return rep;
}

Report run_prime_scan_suite(const Window& w) {
  Report rep;
  std::vector<PrimeScanEntry> scan = prime_scan(w);
  std::vector<std::string> survivors;
  int witnesses = 0;
  std::string sample;
  for (const auto& entry : scan) {
    if (!entry.obstruction) {
      survivors.push_back(to_string(entry.op));
    } else {
      ++witnesses;
      if (sample.empty())
        sample = to_string(entry.op) + ": " + to_string(*entry.obstruction);
    }
  }
  bool ok = survivors.size() == 1 &&
            survivors.front() == to_string(make_identity(w.ring.family));
  std::ostringstream got;
  for (size_t i = 0; i < survivors.size(); ++i)
    got << (i ? ", " : "") << survivors[i];
  rep.add(make_rec("prime-scan", "only-identity-is-prime",
                   ok ? CheckStatus::pass : CheckStatus::fail,
                   "the identity is the only operation passing (e)", got.str(),
                   sample, static_cast<int>(scan.size())));
  rep.add(make_rec("prime-scan", "e-witness-per-op",
                   witnesses + 1 == static_cast<int>(scan.size())
                       ? CheckStatus::pass
                       : CheckStatus::fail,
                   "every non-identity member has a recorded (e) witness",
                   std::to_string(witnesses) + " witnesses", sample,
                   static_cast<int>(scan.size())));
  return rep;
}

Report run_exceptional_suite(const Window& w) {
  Report rep;
  if (w.ring.family != Family::cusp) {
    rep.add(make_rec("exceptional", "detection", CheckStatus::not_instantiable,
                     "cuspidal family only", ""));
    return rep;
  }
  Agg det;
  std::string chain_witness;
  for (const ClosureOp& op : family_members(w)) {
    bool applicable =
        (op.kind == ClosureOp::Kind::cusp_point && op.m <= w.D - 2) ||
        (op.kind == ClosureOp::Kind::cusp_box && op.m <= w.D);
    if (!applicable) continue;
    ++det.checked;
    ExceptionalWitness got = is_exceptional(w, op);
    if (got.exceptional != op.exceptional) {
      det.fail(to_string(op) + (got.exceptional ? " flagged" : " not flagged"));
    } else if (got.exceptional && chain_witness.empty()) {
      std::ostringstream os;
      os << to_string(op) << ": ";
      for (size_t i = 0; i < got.chain.size(); ++i)
        os << (i ? " < " : "") << to_string(got.chain[i]);
      chain_witness = os.str();
    }
  }
  CheckRecord rec = det.rec("exceptional", "detection",
                            "exactly the exceptional boxes are detected");
  if (rec.witness.empty()) rec.witness = chain_witness;
  rep.add(rec);
  rep.append(noncommutativity_witnesses(w));
  return rep;
}

std::string config_string(const SuiteConfig& cfg) {
  std::ostringstream os;
  os << "ring=" << to_string(cfg.window.ring.family);
  if (cfg.window.ring.family == Family::cusp) os << " p=" << cfg.window.ring.p;
  if (cfg.window.ring.family == Family::ded)
    os << " primes=" << cfg.window.ring.nprimes;
  os << " D=" << cfg.window.D << " suites=";
  for (size_t i = 0; i < cfg.suites.size(); ++i)
    os << (i ? "," : "") << cfg.suites[i];
  return os.str();
}

Report run_suite(const SuiteConfig& cfg) {
  Report rep;
  auto selected = [&](const std::string& name) {
    return std::find(cfg.suites.begin(), cfg.suites.end(), name) !=
           cfg.suites.end();
  };
  if (selected("oracle")) rep.append(run_oracle_suite(cfg.window));
  if (selected("axioms")) rep.append(run_axiom_suite(cfg.window));
  if (selected("tables")) rep.append(verify_all_tables(cfg.window));
  if (selected("act")) rep.append(verify_act_structure(cfg.window));
  if (selected("enumeration")) rep.append(run_enumeration_suite(cfg.window));
  if (selected("prime-scan")) rep.append(run_prime_scan_suite(cfg.window));
  if (selected("exceptional")) rep.append(run_exceptional_suite(cfg.window));
  return rep;
}

}  // namespace idealops
