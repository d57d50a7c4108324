#include "idealops/ops.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace idealops {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void require_set(const Ring& r, FieldSet s, const char* name) {
  require((s.mask & ~FieldSet::full(r.p).mask) == 0,
          std::string(name) + " contains elements outside F_p");
}

}  // namespace

std::string to_string(FieldSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int a = 0; a < 16; ++a)
    if (s.has(a)) {
      if (!first) os << ',';
      os << a;
      first = false;
    }
  os << '}';
  return os.str();
}

ClosureOp make_identity(Family fam) {
  ClosureOp op;
  op.fam = fam;
  op.kind = ClosureOp::Kind::identity;
  return op;
}

ClosureOp make_dvr_f(int m) {
  require(m >= 0, "f(m) needs m >= 0");
  ClosureOp op;
  op.fam = Family::dvr;
  op.kind = ClosureOp::Kind::dvr_f;
  op.m = m;
  return op;
}

ClosureOp make_dvr_g(int m) {
  require(m >= 0, "g(m) needs m >= 0");
  ClosureOp op;
  op.fam = Family::dvr;
  op.kind = ClosureOp::Kind::dvr_g;
  op.m = m;
  op.zero = ZeroRule::target;
  return op;
}

ClosureOp make_dvr_jump(int n) {
  // jump(0)/jump(1) coincide with f(0)/f(1); the jump family proper starts at 2
  require(n >= 2, "jump(n) needs n >= 2");
  ClosureOp op;
  op.fam = Family::dvr;
  op.kind = ClosureOp::Kind::dvr_jump;
  op.m = n;
  return op;
}

ClosureOp make_ded_box(const Ring& r, std::vector<int> bounds, ZeroRule zero) {
  require(r.family == Family::ded, "ded_box needs a Dedekind ring");
  require(static_cast<int>(bounds.size()) == r.nprimes, "bounds size mismatch");
  bool all_inf = true;
  for (int b : bounds) {
    require(b == kInf || b >= 0, "bound must be >= 0 or inf");
    if (b != kInf) all_inf = false;
  }
  if (zero == ZeroRule::target) {
    for (int b : bounds)
      require(b != kInf, "zero->bound variant needs every bound finite");
  }
  if (all_inf && zero == ZeroRule::closed) return make_identity(Family::ded);
  ClosureOp op;
  op.fam = Family::ded;
  op.kind = ClosureOp::Kind::ded_box;
  op.bounds = std::move(bounds);
  op.zero = zero;
  return op;
}

ClosureOp make_cusp_int(const Ring& r, int i, FieldSet S, FieldSet T) {
  require(r.family == Family::cusp, "cusp op needs a cuspidal ring");
  require(i >= 2, "int(i,S,T) needs i >= 2");
  require(!S.empty(), "int(i,S,T) needs S nonempty");
  require_set(r, S, "S");
  require_set(r, T, "T");
  ClosureOp op;
  op.fam = Family::cusp;
  op.kind = ClosureOp::Kind::cusp_int;
  op.n = i;
  op.S = S;
  op.T = T;
  return op;
}

ClosureOp make_cusp_int_single(const Ring& r, int i) {
  require(r.family == Family::cusp, "cusp op needs a cuspidal ring");
  require(i >= 2, "int_single(i) needs i >= 2");
  ClosureOp op;
  op.fam = Family::cusp;
  op.kind = ClosureOp::Kind::cusp_int_single;
  op.n = i;
  return op;
}

ClosureOp make_cusp_point(const Ring& r, int m, int a, ZeroRule zero) {
  require(r.family == Family::cusp, "cusp op needs a cuspidal ring");
  require(m >= 2, "point(m,a) needs m >= 2");
  require(a >= 0 && a < r.p, "a must lie in F_p");
  ClosureOp op;
  op.fam = Family::cusp;
  op.kind = ClosureOp::Kind::cusp_point;
  op.m = m;
  op.a = a;
  op.zero = zero;
  return op;
}

// The staircase of a bounded box: levels below n fixed, S-collapse at n,
// T-collapse at n+1, full collapse on [n+2, m-2], level m-1 forced to
// M(m-1) (regular) or M(m-2) (exceptional), floor M(m).  Parameter
// combinations that would leave a fixed principal ideal under a forced
// level are rejected: such a map is not even monotone.
bool cusp_box_params_ok(const Ring& r, int n, FieldSet S, FieldSet T, int m,
                        bool exceptional) {
  FieldSet K = FieldSet::full(r.p);
  if (m < 2 || S.empty() || (S.mask & ~K.mask) || (T.mask & ~K.mask)) return false;
  if (m == 2)  // floor-M(2): no proper P-levels above the floor
    return !exceptional && n == 2 && S == K && T == K;
  if (n < 2 || n > m - 1) return false;
  if (!exceptional) {
    if (n == m - 1 && !(S == K && T == K)) return false;
    if (n == m - 2 && !(T == K)) return false;
    return true;
  }
  // exceptional: M(m-2) must exist and level m-3, when present, must
  // collapse fully (otherwise f(M(m-1)) = M(m-1) is forced)
  if (m < 4) return false;
  if (n == m - 1 && !(m == 4 && S == K && T == K)) return false;
  if (n == m - 2 && !(m == 4 && T == K)) return false;
  if (m >= 5) {
    if (n == m - 3 && !S.is_full(r.p)) return false;
    if (n == m - 4 && !T.is_full(r.p)) return false;
  }
  return true;
}

ClosureOp make_cusp_box(const Ring& r, int n, FieldSet S, FieldSet T, int m,
                        ZeroRule zero, bool exceptional) {
  require(r.family == Family::cusp, "cusp op needs a cuspidal ring");
  require(cusp_box_params_ok(r, n, S, T, m, exceptional),
          "invalid bounded-box parameters");
  ClosureOp op;
  op.fam = Family::cusp;
  op.kind = ClosureOp::Kind::cusp_box;
  op.n = n;
  op.S = S;
  op.T = T;
  op.m = m;
  op.zero = zero;
  op.exceptional = exceptional;
  return op;
}

bool is_semiprime_family(const ClosureOp& op) {
  return op.kind != ClosureOp::Kind::dvr_jump &&
         op.kind != ClosureOp::Kind::cusp_int_single;
}

Ideal apply(const Ring& r, const ClosureOp& op, const Ideal& I) {
  require(op.fam == r.family && I.fam == r.family,
          "operation and ideal must belong to the same ring");
  using K = Ideal::Kind;
  switch (op.kind) {
    case ClosureOp::Kind::identity:
      return I;
    case ClosureOp::Kind::dvr_f:
      if (I.is_zero()) return I;
      return Ideal::dvr_pow(std::min(I.deg, op.m));
    case ClosureOp::Kind::dvr_g:
      if (I.is_zero()) return Ideal::dvr_pow(op.m);
      return Ideal::dvr_pow(std::min(I.deg, op.m));
    case ClosureOp::Kind::dvr_jump:
      if (I.is_zero()) return I;
      return I.deg < op.m ? Ideal::dvr_pow(0) : Ideal::dvr_pow(op.m);
    case ClosureOp::Kind::ded_box: {
      if (I.is_zero()) {
        if (op.zero == ZeroRule::closed) return I;
        std::vector<int> e = op.bounds;
        return Ideal::ded(std::move(e));
      }
      std::vector<int> e(I.exps.size());
      for (size_t k = 0; k < e.size(); ++k)
        e[k] = op.bounds[k] == kInf ? I.exps[k] : std::min(I.exps[k], op.bounds[k]);
      return Ideal::ded(std::move(e));
    }
    case ClosureOp::Kind::cusp_int_single:
      if (I.kind == K::prin && I.deg == op.n) return Ideal::cusp_m(I.deg);
      return I;
    case ClosureOp::Kind::cusp_int: {
      if (I.kind != K::prin) return I;
      if (I.deg < op.n) return I;
      if (I.deg == op.n) return op.S.has(I.coef) ? Ideal::cusp_m(I.deg) : I;
      if (I.deg == op.n + 1) return op.T.has(I.coef) ? Ideal::cusp_m(I.deg) : I;
      return Ideal::cusp_m(I.deg);
    }
    case ClosureOp::Kind::cusp_point: {
      const int m = op.m;
      switch (I.kind) {
        case K::unit: return I;
        case K::zero:
          return op.zero == ZeroRule::closed ? I : Ideal::cusp_p(m, op.a);
        case K::mtwo:
          if (I.deg <= m) return I;
          if (I.deg == m + 1) return Ideal::cusp_m(m);
          return Ideal::cusp_p(m, op.a);
        case K::prin:
          if (I.deg <= m - 2) return I;
          if (I.deg == m - 1) return Ideal::cusp_m(m - 1);
          if (I.deg == m) return I.coef == op.a ? I : Ideal::cusp_m(m);
          if (I.deg == m + 1) return Ideal::cusp_m(m);
          return Ideal::cusp_p(m, op.a);
        default: break;
      }
      break;
    }
    case ClosureOp::Kind::cusp_box: {
      const int m = op.m, n = op.n;
      switch (I.kind) {
        case K::unit: return I;
        case K::zero:
          return op.zero == ZeroRule::closed ? I : Ideal::cusp_m(m);
        case K::mtwo:
          if (I.deg <= m - 2) return I;
          if (I.deg == m - 1) return Ideal::cusp_m(op.exceptional ? m - 2 : m - 1);
          return Ideal::cusp_m(m);
        case K::prin:
          if (I.deg >= m) return Ideal::cusp_m(m);
          if (I.deg == m - 1) return Ideal::cusp_m(op.exceptional ? m - 2 : m - 1);
          if (I.deg < n) return I;
          if (I.deg == n) return op.S.has(I.coef) ? Ideal::cusp_m(n) : I;
          if (I.deg == n + 1) return op.T.has(I.coef) ? Ideal::cusp_m(n + 1) : I;
          return Ideal::cusp_m(I.deg);
        default: break;
      }
      break;
    }
  }
  throw std::logic_error("apply: unhandled case");
}

RawMap to_raw(const ClosureOp& op, std::shared_ptr<const Lattice> lat) {
  RawMap m;
  m.img.resize(lat->size());
  for (int i = 0; i < lat->size(); ++i) {
    Ideal image = apply(lat->w.ring, op, lat->ideals[i]);
    int j = lat->index_of(image);
    if (j < 0)
      throw std::invalid_argument("operation " + to_string(op) +
                                  " maps " + to_string(lat->ideals[i]) +
                                  " outside the window");
    m.img[i] = static_cast<int16_t>(j);
  }
  m.lat = std::move(lat);
  return m;
}

std::string to_string(const ClosureOp& op) {
  std::ostringstream os;
  os << to_string(op.fam) << ':';
  auto zero_str = [&](const char* target_word) {
    return op.zero == ZeroRule::closed ? "closed" : target_word;
  };
  switch (op.kind) {
    case ClosureOp::Kind::identity: os << 'e'; break;
    case ClosureOp::Kind::dvr_f: os << "f(" << op.m << ')'; break;
    case ClosureOp::Kind::dvr_g: os << "g(" << op.m << ')'; break;
    case ClosureOp::Kind::dvr_jump: os << "jump(" << op.m << ')'; break;
    case ClosureOp::Kind::ded_box: {
      os << "box(";
      static const char* names2[] = {"P", "Q"};
      for (size_t k = 0; k < op.bounds.size(); ++k) {
        if (k) os << ',';
        if (op.bounds.size() == 2)
          os << names2[k] << '=';
        else
          os << 'p' << (k + 1) << '=';
        if (op.bounds[k] == kInf)
          os << "inf";
        else
          os << op.bounds[k];
      }
      os << ";zero=" << zero_str("box") << ')';
      break;
    }
    case ClosureOp::Kind::cusp_int:
      os << "int(i=" << op.n << ",S=" << to_string(op.S)
         << ",T=" << to_string(op.T) << ')';
      break;
    case ClosureOp::Kind::cusp_int_single:
      os << "intsingle(i=" << op.n << ')';
      break;
    case ClosureOp::Kind::cusp_point:
      os << "fpoint(m=" << op.m << ",a=" << op.a << ",zero=" << zero_str("target")
         << ')';
      break;
    case ClosureOp::Kind::cusp_box:
      os << "fbox(n=" << op.n << ",S=" << to_string(op.S)
         << ",T=" << to_string(op.T) << ",m=" << op.m
         << ",zero=" << zero_str("target")
         << ",exc=" << (op.exceptional ? "true" : "false") << ')';
      break;
  }
  return os.str();
}

namespace {

struct LiteralParser {
  const std::string& s;
  size_t pos = 0;

  explicit LiteralParser(const std::string& text) : s(text) {}

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("bad operation literal '" + s + "': " + why);
  }
  bool eat(char c) {
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool eat_word(const std::string& w) {
    if (s.compare(pos, w.size(), w) == 0) { pos += w.size(); return true; }
    return false;
  }
  int number() {
    size_t start = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return std::stoi(s.substr(start, pos - start));
  }
  FieldSet set() {
    expect('{');
    FieldSet out;
    if (!eat('}')) {
      do {
        int v = number();
        if (v > 15) fail("set element too large");
        out.mask = static_cast<uint16_t>(out.mask | (1u << v));
      } while (eat(','));
      expect('}');
    }
    return out;
  }
  std::string word() {
    size_t start = pos;
    while (pos < s.size() && (isalnum(static_cast<unsigned char>(s[pos])))) ++pos;
    return s.substr(start, pos - start);
  }
};

}  // namespace

ClosureOp parse_op(const Ring& r, const std::string& text) {
  LiteralParser in(text);
  std::string fam = in.word();
  in.expect(':');
  if (fam != to_string(r.family))
    in.fail("family does not match the ring (" + to_string(r.family) + ")");
  std::string name = in.word();
  if (name == "e") {
    if (in.pos != text.size()) in.fail("trailing characters");
    return make_identity(r.family);
  }
  auto parse_zero = [&](const char* target_word) {
    std::string w = in.word();
    if (w == "closed") return ZeroRule::closed;
    if (w == target_word) return ZeroRule::target;
    in.fail(std::string("zero must be 'closed' or '") + target_word + "'");
  };
  ClosureOp op;
  if (r.family == Family::dvr) {
    in.expect('(');
    int v = in.number();
    in.expect(')');
    if (name == "f") op = make_dvr_f(v);
    else if (name == "g") op = make_dvr_g(v);
    else if (name == "jump") op = make_dvr_jump(v);
    else in.fail("unknown dvr operation '" + name + "'");
  } else if (r.family == Family::ded) {
    if (name != "box") in.fail("unknown ded operation '" + name + "'");
    in.expect('(');
    std::vector<int> bounds(r.nprimes, kInf);
    std::vector<bool> seen(r.nprimes, false);
    do {
      std::string key = in.word();
      in.expect('=');
      int idx;
      if (r.nprimes == 2 && (key == "P" || key == "Q"))
        idx = key == "P" ? 0 : 1;
      else if (key.size() >= 2 && key[0] == 'p')
        idx = std::stoi(key.substr(1)) - 1;
      else
        in.fail("unknown prime name '" + key + "'");
      if (idx < 0 || idx >= r.nprimes) in.fail("prime index out of range");
      if (seen[idx]) in.fail("duplicate prime '" + key + "'");
      seen[idx] = true;
      if (in.eat_word("inf")) bounds[idx] = kInf;
      else bounds[idx] = in.number();
    } while (in.eat(','));
    in.expect(';');
    if (in.word() != "zero") in.fail("expected zero=");
    in.expect('=');
    ZeroRule z = parse_zero("box");
    in.expect(')');
    for (bool b : seen)
      if (!b) in.fail("every prime needs a bound");
    op = make_ded_box(r, std::move(bounds), z);
  } else {
    auto key_number = [&](const char* key) {
      if (in.word() != key) in.fail(std::string("expected ") + key + "=");
      in.expect('=');
      return in.number();
    };
    auto key_set = [&](const char* key) {
      if (in.word() != key) in.fail(std::string("expected ") + key + "=");
      in.expect('=');
      return in.set();
    };
    in.expect('(');
    if (name == "int") {
      int i = key_number("i");
      in.expect(',');
      FieldSet S = key_set("S");
      in.expect(',');
      FieldSet T = key_set("T");
      in.expect(')');
      op = make_cusp_int(r, i, S, T);
    } else if (name == "intsingle") {
      int i = key_number("i");
      in.expect(')');
      op = make_cusp_int_single(r, i);
    } else if (name == "fpoint") {
      int m = key_number("m");
      in.expect(',');
      int a = key_number("a");
      in.expect(',');
      if (in.word() != "zero") in.fail("expected zero=");
      in.expect('=');
      ZeroRule z = parse_zero("target");
      in.expect(')');
      op = make_cusp_point(r, m, a, z);
    } else if (name == "fbox") {
      int n = key_number("n");
      in.expect(',');
      FieldSet S = key_set("S");
      in.expect(',');
      FieldSet T = key_set("T");
      in.expect(',');
      int m = key_number("m");
      in.expect(',');
      if (in.word() != "zero") in.fail("expected zero=");
      in.expect('=');
      ZeroRule z = parse_zero("target");
      in.expect(',');
      if (in.word() != "exc") in.fail("expected exc=");
      in.expect('=');
      bool exc;
      if (in.eat_word("true")) exc = true;
      else if (in.eat_word("false")) exc = false;
      else in.fail("exc must be true or false");
      in.expect(')');
      op = make_cusp_box(r, n, S, T, m, z, exc);
    } else {
      in.fail("unknown cusp operation '" + name + "'");
    }
  }
  if (in.pos != text.size()) in.fail("trailing characters");
  return op;
}

bool canonical_less(const ClosureOp& x, const ClosureOp& y) {
  auto rank = [](const ClosureOp& o) {
    switch (o.kind) {
      case ClosureOp::Kind::identity: return 0;
      case ClosureOp::Kind::dvr_f: return 1;
      case ClosureOp::Kind::dvr_g: return 2;
      case ClosureOp::Kind::dvr_jump: return 3;
      case ClosureOp::Kind::ded_box: return 1;
      case ClosureOp::Kind::cusp_int: return 1;
      case ClosureOp::Kind::cusp_point: return 2;
      case ClosureOp::Kind::cusp_box: return o.exceptional ? 4 : 3;
      case ClosureOp::Kind::cusp_int_single: return 5;
    }
    return 9;
  };
  auto key = [&](const ClosureOp& o) {
    std::vector<int> bounds_sorted;
    for (int b : o.bounds) bounds_sorted.push_back(b == kInf ? 1 << 20 : b);
    return std::tuple(rank(o), o.m, o.n, o.a, static_cast<int>(o.S.mask),
                      static_cast<int>(o.T.mask), static_cast<int>(o.zero),
                      bounds_sorted);
  };
  return key(x) < key(y);
}

std::vector<ClosureOp> family_members(const Window& w) {
  std::vector<ClosureOp> out;
  out.push_back(make_identity(w.ring.family));
  switch (w.ring.family) {
    case Family::dvr: {
      for (int m = 0; m <= w.D; ++m) out.push_back(make_dvr_f(m));
      for (int m = 0; m <= w.D; ++m) out.push_back(make_dvr_g(m));
      break;
    }
    case Family::ded: {
      const int k = w.ring.nprimes;
      // bounds over {0..D, inf}; a bound of D already aliases inf in-window
      std::vector<int> choices;
      for (int b = 0; b <= w.D; ++b) choices.push_back(b);
      choices.push_back(kInf);
      std::vector<int> cur(k, 0), pick(k, 0);
      const int nc = static_cast<int>(choices.size());
      while (true) {
        std::vector<int> bounds(k);
        bool all_inf = true, all_finite = true;
        for (int j = 0; j < k; ++j) {
          bounds[j] = choices[pick[j]];
          if (bounds[j] != kInf) all_inf = false;
          else all_finite = false;
        }
        if (!all_inf) out.push_back(make_ded_box(w.ring, bounds, ZeroRule::closed));
        if (all_finite) out.push_back(make_ded_box(w.ring, bounds, ZeroRule::target));
        int j = k - 1;
        while (j >= 0 && pick[j] == nc - 1) pick[j--] = 0;
        if (j < 0) break;
        ++pick[j];
      }
      break;
    }
    case Family::cusp: {
      const int p = w.ring.p;
      std::vector<FieldSet> nonempty, all;
      for (int mask = 0; mask < (1 << p); ++mask) {
        FieldSet s{static_cast<uint16_t>(mask)};
        all.push_back(s);
        if (!s.empty()) nonempty.push_back(s);
      }
      for (int i = 2; i <= w.D; ++i)
        for (FieldSet S : nonempty)
          for (FieldSet T : all) out.push_back(make_cusp_int(w.ring, i, S, T));
      for (int m = 2; m <= w.D + 1; ++m)
        for (int a = 0; a < p; ++a) {
          out.push_back(make_cusp_point(w.ring, m, a, ZeroRule::closed));
          if (m <= w.D)
            out.push_back(make_cusp_point(w.ring, m, a, ZeroRule::target));
        }
      for (int exc = 0; exc <= 1; ++exc)
        for (int m = 2; m <= w.D + 1; ++m)
          for (int n = 2; n <= std::max(m - 1, 2); ++n)
            for (FieldSet S : nonempty)
              for (FieldSet T : all) {
                if (!cusp_box_params_ok(w.ring, n, S, T, m, exc != 0)) continue;
                out.push_back(
                    make_cusp_box(w.ring, n, S, T, m, ZeroRule::closed, exc != 0));
                if (m <= w.D)
                  out.push_back(
                      make_cusp_box(w.ring, n, S, T, m, ZeroRule::target, exc != 0));
              }
      break;
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ClosureOp> closure_only_members(const Window& w) {
  std::vector<ClosureOp> out;
  switch (w.ring.family) {
    case Family::dvr:
      for (int n = 2; n <= w.D; ++n) out.push_back(make_dvr_jump(n));
      break;
    case Family::cusp:
      for (int i = 2; i <= w.D; ++i)
        out.push_back(make_cusp_int_single(w.ring, i));
      break;
    case Family::ded:
      break;
  }
  return out;
}

}  // namespace idealops
