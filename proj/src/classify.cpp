#include "ramsey/classify.hpp"

#include <algorithm>
#include <optional>

#include "ramsey/arith.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

// --------------------------------------------------------------------------
// Rationals for exponents and slopes. Always normalized; operations that
// would leave 64 bits return nullopt and the caller drops the refinement.

struct Rat {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  friend bool operator==(const Rat&, const Rat&) = default;
};

std::uint64_t gcd_u128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    const unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return static_cast<std::uint64_t>(a > UINT64_MAX ? 1 : a);
}

std::optional<Rat> make_rat(unsigned __int128 n, unsigned __int128 d) {
  if (d == 0) return std::nullopt;
  if (n == 0) return Rat{0, 1};
  const unsigned __int128 g = gcd_u128(n, d);
  n /= g;
  d /= g;
  if (n > UINT64_MAX || d > UINT64_MAX) return std::nullopt;
  return Rat{static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d)};
}

Rat rat(std::uint64_t n, std::uint64_t d = 1) { return *make_rat(n, d); }

bool rat_less(const Rat& a, const Rat& b) {
  return (unsigned __int128)a.num * b.den < (unsigned __int128)b.num * a.den;
}

std::optional<Rat> rat_add(const Rat& a, const Rat& b) {
  return make_rat((unsigned __int128)a.num * b.den + (unsigned __int128)b.num * a.den,
                  (unsigned __int128)a.den * b.den);
}

std::optional<Rat> rat_sub(const Rat& a, const Rat& b) {  // requires a >= b
  return make_rat((unsigned __int128)a.num * b.den - (unsigned __int128)b.num * a.den,
                  (unsigned __int128)a.den * b.den);
}

std::optional<Rat> rat_mul(const Rat& a, const Rat& b) {
  return make_rat((unsigned __int128)a.num * b.num, (unsigned __int128)a.den * b.den);
}

std::optional<Rat> rat_half(const Rat& a) {
  return make_rat(a.num, (unsigned __int128)a.den * 2);
}

// --------------------------------------------------------------------------
// Conservative asymptotic summary of a subexpression. Soundness contract:
//
//   Const: the value is eventually <= cbound; if `exact`, eventually equal
//          to cbound.
//   Grow:  the value tends to infinity and is O(n^deg * log2(n)^logpow);
//          `theta` adds the matching lower bound. When (deg, logpow) is
//          exactly (1, 0): `slope` (if known) means value = slope*n + o(n),
//          and `affine` means value = n + O(1). slope_known and affine each
//          imply theta.
//   Unknown: no claim. Every rule may weaken to Unknown, never strengthen.

struct Growth {
  enum class Kind { Const, Grow, Unknown };
  Kind kind = Kind::Unknown;
  std::uint64_t cbound = 0;
  bool exact = false;
  Rat deg, logpow;
  bool theta = false;
  bool slope_known = false;
  Rat slope;
  bool affine = false;
};

Growth g_unknown() { return {}; }

Growth g_const(std::uint64_t bound, bool exact) {
  Growth g;
  g.kind = Growth::Kind::Const;
  g.cbound = bound;
  // An eventual upper bound of zero is an eventual value of zero.
  g.exact = exact || bound == 0;
  return g;
}

bool is_linear_class(const Growth& g) { return g.deg == rat(1) && g.logpow == rat(0); }

// Lexicographic class order on (deg, logpow): smaller class means
// asymptotically strictly slower growth (log factors lose to any positive
// degree gap).
int cmp_class(const Growth& a, const Growth& b) {
  if (a.deg != b.deg) return rat_less(a.deg, b.deg) ? -1 : 1;
  if (a.logpow != b.logpow) return rat_less(a.logpow, b.logpow) ? -1 : 1;
  return 0;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > UINT64_MAX / b ? UINT64_MAX : a * b;
}

Growth analyze_sum(const Growth& a, const Growth& b) {
  using K = Growth::Kind;
  if (a.kind == K::Unknown || b.kind == K::Unknown) return g_unknown();
  if (a.kind == K::Const && b.kind == K::Const) {
    const std::uint64_t r = sat_add(a.cbound, b.cbound);
    // Saturation keeps the upper bound valid but forfeits exactness.
    return g_const(r, a.exact && b.exact && r != UINT64_MAX);
  }
  const Growth& grow = a.kind == K::Grow ? a : b;
  const Growth& other = a.kind == K::Grow ? b : a;
  if (other.kind == K::Const) return grow;  // bounded addend changes nothing
  // Grow + Grow.
  const int c = cmp_class(a, b);
  if (c != 0) {
    // The dominant term dictates the class; the lower-class addend is o() of
    // it. An unbounded addend does break the n + O(1) form.
    Growth r = c > 0 ? a : b;
    r.affine = false;
    return r;
  }
  Growth r;
  r.kind = K::Grow;
  r.deg = a.deg;
  r.logpow = a.logpow;
  r.theta = a.theta || b.theta;
  if (is_linear_class(r) && a.slope_known && b.slope_known) {
    if (auto s = rat_add(a.slope, b.slope)) {
      r.slope_known = true;
      r.slope = *s;
      r.theta = true;
    }
  }
  return r;
}

Growth analyze_difference(const Growth& a, const Growth& b) {
  using K = Growth::Kind;
  if (a.kind == K::Const) {
    // value <= cbound regardless of the subtrahend; if the subtrahend grows
    // without bound, truncation pins the value to zero eventually.
    if (b.kind == K::Grow) return g_const(0, true);
    if (b.kind == K::Const && a.exact && b.exact)
      return g_const(truncated_sub(a.cbound, b.cbound), true);
    return g_const(a.cbound, false);
  }
  if (a.kind == K::Unknown) return g_unknown();
  // a is Grow.
  if (b.kind == K::Const) return a;  // subtracting a bounded term keeps everything
  if (b.kind == K::Unknown) return g_unknown();
  const int c = cmp_class(a, b);
  if (c > 0) {
    if (!a.theta) return g_unknown();
    Growth r = a;
    r.theta = true;
    r.affine = false;  // an unbounded subtrahend leaves n - omega(1)
    return r;
  }
  if (c < 0) {
    // Subtrahend of strictly larger class: with its lower bound in place the
    // truncated difference is eventually zero.
    return b.theta ? g_const(0, true) : g_unknown();
  }
  // Equal class: only the linear case with known slopes is decidable.
  if (is_linear_class(a) && a.slope_known && b.slope_known) {
    if (rat_less(b.slope, a.slope)) {
      if (auto s = rat_sub(a.slope, b.slope)) {
        Growth r;
        r.kind = K::Grow;
        r.deg = rat(1);
        r.logpow = rat(0);
        r.theta = true;
        r.slope_known = true;
        r.slope = *s;
        return r;
      }
      return g_unknown();
    }
    if (rat_less(a.slope, b.slope)) return g_const(0, true);
    return g_unknown();  // equal slopes: the o(n) residue decides, invisible here
  }
  return g_unknown();
}

Growth analyze_product(const Growth& a, const Growth& b) {
  using K = Growth::Kind;
  // Annihilation first: an eventually-zero factor zeroes the product even
  // when the other side is unknown.
  if ((a.kind == K::Const && a.cbound == 0) || (b.kind == K::Const && b.cbound == 0))
    return g_const(0, true);
  if (a.kind == K::Unknown || b.kind == K::Unknown) return g_unknown();
  if (a.kind == K::Const && b.kind == K::Const) {
    const std::uint64_t r = sat_mul(a.cbound, b.cbound);
    return g_const(r, a.exact && b.exact && r != UINT64_MAX);
  }
  if (a.kind == K::Const || b.kind == K::Const) {
    const Growth& k = a.kind == K::Const ? a : b;
    const Growth& g = a.kind == K::Const ? b : a;
    // A non-exact bounded factor may keep returning to zero, so nothing can
    // be said about the product's growth.
    if (!k.exact) return g_unknown();
    Growth r = g;
    r.affine = g.affine && k.cbound == 1;
    if (g.slope_known) {
      if (auto s = rat_mul(g.slope, rat(k.cbound))) {
        r.slope = *s;
      } else {
        r.slope_known = false;
      }
    }
    return r;
  }
  Growth r;
  r.kind = K::Grow;
  const auto d = rat_add(a.deg, b.deg);
  const auto l = rat_add(a.logpow, b.logpow);
  if (!d || !l) return g_unknown();
  r.deg = *d;
  r.logpow = *l;
  r.theta = a.theta && b.theta;
  return r;
}

Growth analyze_scale(std::uint64_t p, std::uint64_t q, Rounding rounding, const Growth& a) {
  using K = Growth::Kind;
  if (p == 0) return g_const(0, true);
  if (a.kind == K::Unknown) return g_unknown();
  if (a.kind == K::Const) {
    // Saturating fold; the analysis itself must not throw on capacity.
    const unsigned __int128 prod = (unsigned __int128)p * a.cbound;
    const unsigned __int128 r = rounding == Rounding::Ceil ? (prod + (q - 1)) / q : prod / q;
    if (r > UINT64_MAX) return g_const(UINT64_MAX, false);
    return g_const(static_cast<std::uint64_t>(r), a.exact);
  }
  Growth r = a;
  r.affine = a.affine && p == q;
  if (a.slope_known) {
    if (auto s = rat_mul(a.slope, rat(p, q))) {
      r.slope = *s;
    } else {
      r.slope_known = false;
    }
  }
  return r;
}

Growth analyze_log(const Growth& a) {
  using K = Growth::Kind;
  if (a.kind == K::Unknown) return g_unknown();
  if (a.kind == K::Const) return g_const(ceil_log2(a.cbound), a.exact);
  Growth r;
  r.kind = K::Grow;
  r.deg = rat(0);
  r.logpow = rat(1);
  // log of anything polynomially bounded is O(log n); it is Theta(log n)
  // only when the argument has a positive-degree lower bound.
  r.theta = a.theta && rat_less(rat(0), a.deg);
  return r;
}

Growth analyze_sqrt(const Growth& a) {
  using K = Growth::Kind;
  if (a.kind == K::Unknown) return g_unknown();
  if (a.kind == K::Const) return g_const(ceil_sqrt(a.cbound), a.exact);
  Growth r;
  r.kind = K::Grow;
  const auto d = rat_half(a.deg);
  const auto l = rat_half(a.logpow);
  if (!d || !l) return g_unknown();
  r.deg = *d;
  r.logpow = *l;
  r.theta = a.theta;
  return r;
}

Growth analyze_min(const Growth& a, const Growth& b) {
  using K = Growth::Kind;
  if (a.kind == K::Const && b.kind == K::Const)
    return g_const(std::min(a.cbound, b.cbound), a.exact && b.exact);
  // Against an unbounded branch a bounded one wins the minimum eventually.
  if (a.kind == K::Const && b.kind == K::Grow) return a;
  if (b.kind == K::Const && a.kind == K::Grow) return b;
  // A bounded branch caps the minimum no matter what the other side does.
  if (a.kind == K::Const) return g_const(a.cbound, false);
  if (b.kind == K::Const) return g_const(b.cbound, false);
  if (a.kind == K::Unknown || b.kind == K::Unknown) return g_unknown();
  const int c = cmp_class(a, b);
  if (c != 0) {
    const Growth& lo = c < 0 ? a : b;
    const Growth& hi = c < 0 ? b : a;
    if (hi.theta) return lo;  // the larger branch eventually clears the smaller
    Growth r = lo;
    r.theta = false;
    r.slope_known = false;
    r.affine = false;
    return r;
  }
  Growth r;
  r.kind = K::Grow;
  r.deg = a.deg;
  r.logpow = a.logpow;
  r.theta = a.theta && b.theta;
  if (is_linear_class(r) && a.slope_known && b.slope_known) {
    r.slope_known = true;
    r.slope = rat_less(a.slope, b.slope) ? a.slope : b.slope;
    r.theta = true;
  }
  r.affine = a.affine && b.affine;
  return r;
}

Growth analyze_max(const Growth& a, const Growth& b) {
  using K = Growth::Kind;
  if (a.kind == K::Unknown || b.kind == K::Unknown) return g_unknown();
  if (a.kind == K::Const && b.kind == K::Const)
    return g_const(std::max(a.cbound, b.cbound), a.exact && b.exact);
  if (a.kind == K::Const) return b;  // the unbounded branch wins eventually
  if (b.kind == K::Const) return a;
  const int c = cmp_class(a, b);
  if (c != 0) return c > 0 ? a : b;
  Growth r;
  r.kind = K::Grow;
  r.deg = a.deg;
  r.logpow = a.logpow;
  r.theta = a.theta || b.theta;
  if (is_linear_class(r) && a.slope_known && b.slope_known) {
    r.slope_known = true;
    r.slope = rat_less(a.slope, b.slope) ? b.slope : a.slope;
    r.theta = true;
  }
  r.affine = a.affine && b.affine;
  return r;
}

Growth analyze(const ThresholdExpr& e) {
  using Kind = ThresholdExpr::Kind;
  switch (e.kind()) {
    case Kind::Constant:
      return g_const(e.value(), true);
    case Kind::Variable: {
      Growth g;
      g.kind = Growth::Kind::Grow;
      g.deg = rat(1);
      g.logpow = rat(0);
      g.theta = true;
      g.slope_known = true;
      g.slope = rat(1);
      g.affine = true;
      return g;
    }
    case Kind::Sum:
      return analyze_sum(analyze(e.child(0)), analyze(e.child(1)));
    case Kind::Difference:
      return analyze_difference(analyze(e.child(0)), analyze(e.child(1)));
    case Kind::Product:
      return analyze_product(analyze(e.child(0)), analyze(e.child(1)));
    case Kind::Scale:
      return analyze_scale(e.numer(), e.denom(), e.rounding(), analyze(e.child(0)));
    case Kind::CeilLog2:
      return analyze_log(analyze(e.child(0)));
    case Kind::CeilSqrt:
      return analyze_sqrt(analyze(e.child(0)));
    case Kind::Min:
      return analyze_min(analyze(e.child(0)), analyze(e.child(1)));
    case Kind::Max:
      return analyze_max(analyze(e.child(0)), analyze(e.child(1)));
  }
  return g_unknown();
}

// Symbolic case decision. nullopt: no rule fired, fall back to sampling.
std::optional<FunctionCase> classify_symbolic(const ThresholdExpr& f) {
  const Growth g = analyze(f);
  if (g.kind == Growth::Kind::Const) return FunctionCase::Case1_Bounded;
  if (g.kind == Growth::Kind::Grow) {
    const Growth linear = [] {
      Growth l;
      l.deg = rat(1);
      l.logpow = rat(0);
      return l;
    }();
    if (cmp_class(g, linear) < 0) return FunctionCase::Case2_SublinearUnbounded;
    if (cmp_class(g, linear) == 0) {
      if (g.affine) return FunctionCase::Case4_NearN;
      if (g.slope_known && rat_less(g.slope, rat(1))) return FunctionCase::Case3_LinearButFarFromN;
    }
  }
  // f = A - B with A = n + O(1): the subtrahend's growth against log n
  // separates the near-n case from the linear-gap case.
  if (f.kind() == ThresholdExpr::Kind::Difference) {
    const Growth ga = analyze(f.child(0));
    const Growth gb = analyze(f.child(1));
    if (ga.kind == Growth::Kind::Grow && ga.affine) {
      if (gb.kind == Growth::Kind::Const) return FunctionCase::Case4_NearN;
      if (gb.kind == Growth::Kind::Grow) {
        const bool sublog = gb.deg == rat(0) && !rat_less(rat(1), gb.logpow);
        if (sublog) return FunctionCase::Case4_NearN;  // B in O(log n)
        const bool superlog_sublinear =
            gb.theta && ((gb.deg == rat(0) && rat_less(rat(1), gb.logpow)) ||
                         (rat_less(rat(0), gb.deg) && rat_less(gb.deg, rat(1))));
        if (superlog_sublinear) return FunctionCase::Case3_LinearButFarFromN;
      }
    }
  }
  return std::nullopt;
}

// --------------------------------------------------------------------------
// Sampling on the doubling schedule. n[j] = 2^(j+1), so ceil(log2 n[j]) is
// j+1 exactly, which keeps the near-n scan in pure integers.

struct Samples {
  std::vector<std::uint64_t> n;
  std::vector<std::uint64_t> v;
};

Samples take_samples(const std::function<std::uint64_t(std::uint64_t)>& f) {
  Samples s;
  s.n = doubling_schedule();
  s.v.reserve(s.n.size());
  for (const std::uint64_t n : s.n) s.v.push_back(f(n));
  // Monotonicity is asymptotic, matching threshold validation: a dip that
  // recovers is fine (n minus a squared log dips below zero early), but
  // evidence ending below its running maximum is inconsistent with a
  // nondecreasing function.
  std::size_t peak = 0;
  for (std::size_t j = 1; j < s.v.size(); ++j)
    if (s.v[j] >= s.v[peak]) peak = j;
  if (s.v[peak] > s.v.back())
    throw ValidationError("threshold decreases between sampled n=" + std::to_string(s.n[peak]) +
                          " and n=" + std::to_string(s.n.back()) + " without recovering");
  return s;
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return a == 0 ? 0 : (a - 1) / b + 1; }

// Least c <= climit such that f(n) >= n - c*ceil(log2 n) on a sampled
// suffix; returns (c, suffix start index). The least feasible c is forced by
// the last sample; the suffix is then extended as far left as it reaches.
std::optional<std::pair<std::uint64_t, std::size_t>> scan_near_n(const Samples& s,
                                                                 std::uint64_t climit) {
  const std::size_t m = s.n.size();
  std::vector<std::uint64_t> need(m);
  for (std::size_t j = 0; j < m; ++j)
    need[j] = ceil_div(truncated_sub(s.n[j], s.v[j]), j + 1);
  const std::uint64_t c = need.back();
  if (c > climit) return std::nullopt;
  std::size_t start = m - 1;
  while (start > 0 && need[start - 1] <= c) --start;
  return std::make_pair(c, start);
}

constexpr std::size_t kPlateauWindow = 8;
constexpr std::uint64_t kWitnessScanLimit = 64;
constexpr std::uint64_t kWitnessScanExtended = std::uint64_t{1} << 20;

bool plateaued(const Samples& s) {
  const std::size_t m = s.v.size();
  for (std::size_t j = m - kPlateauWindow; j < m; ++j)
    if (s.v[j] != s.v.back()) return false;
  return true;
}

FunctionCase decide_empirical(const Samples& s) {
  if (plateaued(s)) return FunctionCase::Case1_Bounded;
  if (scan_near_n(s, kWitnessScanLimit)) return FunctionCase::Case4_NearN;
  // Divergence fork on the ratio n / f(n): doubling between n = 2^20 and
  // n = 2^40 reads as f in o(n); a flat ratio reads as f in Omega(n).
  const auto ratio = [&](std::size_t j) { return s.n[j] / std::max<std::uint64_t>(s.v[j], 1); };
  return ratio(39) >= 2 * ratio(19) ? FunctionCase::Case2_SublinearUnbounded
                                    : FunctionCase::Case3_LinearButFarFromN;
}

void fill_witnesses(FunctionClass& out, const Samples& s) {
  const std::size_t m = s.n.size();
  out.schedule.clear();
  switch (out.case_) {
    case FunctionCase::Case1_Bounded:
      out.witness_c = s.v.back();
      out.n0 = s.n.front();  // monotone, so the bound holds from the start
      break;
    case FunctionCase::Case2_SublinearUnbounded:
      for (std::size_t j = 0; j < m; ++j)
        out.schedule.emplace_back(s.n[j], s.n[j] / std::max<std::uint64_t>(s.v[j], 1));
      break;
    case FunctionCase::Case3_LinearButFarFromN: {
      // f(n) >= n/a on the tail half of the schedule.
      constexpr std::size_t kTailStart = 19;  // n = 2^20
      std::uint64_t a = 1;
      for (std::size_t j = kTailStart; j < m; ++j)
        a = std::max(a, ceil_div(s.n[j], std::max<std::uint64_t>(s.v[j], 1)));
      out.omega_constant = a;
      out.n0 = s.n[kTailStart];
      for (std::size_t j = 0; j < m; ++j)
        out.schedule.emplace_back(s.n[j], truncated_sub(s.n[j], s.v[j]) / (j + 1));
      break;
    }
    case FunctionCase::Case4_NearN: {
      auto hit = scan_near_n(s, kWitnessScanLimit);
      if (!hit) {
        // A proved near-n function whose constant exceeds the standard scan
        // window; widen the search rather than leave the witness empty.
        hit = scan_near_n(s, kWitnessScanExtended);
      }
      if (hit) {
        out.witness_c = hit->first;
        out.n0 = s.n[hit->second];
      }
      for (std::size_t j = 0; j < m; ++j)
        out.schedule.emplace_back(s.n[j], ceil_div(truncated_sub(s.n[j], s.v[j]), j + 1));
      break;
    }
  }
}

}  // namespace

FunctionClass classify(const ThresholdExpr& f) {
  validate_threshold(f);
  const Samples s = take_samples([&](std::uint64_t n) { return f.eval(n); });
  FunctionClass out;
  out.poly_time = true;
  if (const auto sym = classify_symbolic(f)) {
    out.case_ = *sym;
    out.certainty = Certainty::Proved;
  } else {
    out.case_ = decide_empirical(s);
    out.certainty = Certainty::Empirical;
  }
  fill_witnesses(out, s);
  return out;
}

FunctionClass classify_sampled(const std::function<std::uint64_t(std::uint64_t)>& f,
                               bool poly_time_declared) {
  const Samples s = take_samples(f);
  FunctionClass out;
  out.poly_time = poly_time_declared;
  out.certainty = Certainty::Empirical;
  out.case_ = decide_empirical(s);
  fill_witnesses(out, s);
  return out;
}

Verdict dichotomy_verdict(const FunctionClass& cls) {
  if (!cls.poly_time) return {false, VerdictReason::NotPolyComputable, Assumption::None};
  switch (cls.case_) {
    case FunctionCase::Case1_Bounded:
    case FunctionCase::Case4_NearN:
      return {true, VerdictReason::ConstantLogBounded, Assumption::None};
    case FunctionCase::Case2_SublinearUnbounded:
      return {false, VerdictReason::SublinearUnbounded_ETH, Assumption::ETH};
    case FunctionCase::Case3_LinearButFarFromN:
      return {false, VerdictReason::LinearNotCLB_ETH, Assumption::ETH};
  }
  throw Error("corrupt classification");
}

const char* to_string(FunctionCase c) {
  switch (c) {
    case FunctionCase::Case1_Bounded:
      return "case1-bounded";
    case FunctionCase::Case2_SublinearUnbounded:
      return "case2-sublinear-unbounded";
    case FunctionCase::Case3_LinearButFarFromN:
      return "case3-linear-but-far-from-n";
    case FunctionCase::Case4_NearN:
      return "case4-near-n";
  }
  return "?";
}

const char* to_string(Certainty c) { return c == Certainty::Proved ? "proved" : "empirical"; }

const char* to_string(VerdictReason r) {
  switch (r) {
    case VerdictReason::ConstantLogBounded:
      return "constant-log-bounded";
    case VerdictReason::NotPolyComputable:
      return "not-poly-computable";
    case VerdictReason::SublinearUnbounded_ETH:
      return "sublinear-unbounded-eth";
    case VerdictReason::LinearNotCLB_ETH:
      return "linear-not-clb-eth";
  }
  return "?";
}

const char* to_string(Assumption a) { return a == Assumption::ETH ? "eth" : "none"; }

}  // namespace ramsey
