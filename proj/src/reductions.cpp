#include "ramsey/reductions.hpp"

#include <algorithm>
#include <sstream>

#include "ramsey/classify.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

void require_nonempty(const Graph& g) {
  if (g.size() == 0) throw PreconditionError("reduction input must be nonempty");
}

void require_all_eligible(const Graph& g) {
  if (g.eligible_count() != g.size())
    throw PreconditionError("clique embeddings expect a plain simple graph; every vertex must "
                            "be eligible");
}

void require_case(const ThresholdExpr& f, FunctionCase wanted, const char* what) {
  const FunctionClass cls = classify(f);
  if (cls.case_ != wanted)
    throw PreconditionError(std::string(what) + " requires a " + to_string(wanted) +
                            " threshold, got " + to_string(cls.case_));
}

}  // namespace

ReductionOutput pad_instance(const Graph& g, std::uint64_t b, const ThresholdExpr& f) {
  require_nonempty(g);
  require_case(f, FunctionCase::Case2_SublinearUnbounded, "padding");
  const std::uint64_t n = g.size();

  // Least delta with f(n + delta) <= b + delta. The predicate is not
  // monotone in delta (f may jump), so the scan is linear; the doubling
  // fallback only guards against a pathological faraway solution.
  std::optional<std::uint64_t> delta;
  constexpr std::uint64_t kLinearScan = std::uint64_t{1} << 20;
  for (std::uint64_t d = 0; d <= kLinearScan; ++d) {
    if (f.eval(n + d) <= b + d) {
      delta = d;
      break;
    }
  }
  if (!delta) {
    for (std::uint64_t d = kLinearScan * 2; n + d <= kSampleHorizon; d *= 2) {
      if (f.eval(n + d) <= b + d) {
        delta = d;
        break;
      }
    }
  }
  if (!delta) throw PreconditionError("padding scan exhausted its horizon; threshold not sublinear enough");

  ReductionOutput out{.graph = add_vertices(g, static_cast<std::size_t>(*delta), 0),
                      .construction = Construction::Pad,
                      .input_size = g.size()};
  out.request = b;
  out.delta = *delta;
  out.universal = *delta;
  out.isolated = 0;
  out.n_prime = n + *delta;
  out.k_prime = b + *delta;  // b'
  return out;
}

std::optional<std::uint64_t> probe_function(
    const std::function<bool(const Graph&)>& ramsey_oracle, std::size_t n) {
  if (n == 0) throw PreconditionError("probe needs n >= 1");
  // G_i: n vertices, the first i pairwise related (including reflexively),
  // nothing else. Its largest homogeneous set has exactly i elements, so
  // G_i is accepted iff i >= f(n): a monotone predicate over i.
  const auto accepted = [&](std::size_t i) {
    Graph gi(n);
    gi.set_all_eligible(false);
    for (std::size_t v = 0; v < i; ++v) {
      gi.set_eligible(v, true);
      for (std::size_t u = v + 1; u < i; ++u) gi.add_edge(v, u);
    }
    return ramsey_oracle(gi);
  };
  if (!accepted(n)) return std::nullopt;  // f(n) > n
  std::size_t lo = 0, hi = n;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (accepted(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

ReductionOutput embed_kclique_sublinear(const Graph& g, std::uint64_t k, const ThresholdExpr& f) {
  require_nonempty(g);
  require_all_eligible(g);
  if (k == 0) throw PreconditionError("embedding needs k >= 1");
  require_case(f, FunctionCase::Case2_SublinearUnbounded, "the sublinear embedding");
  const std::uint64_t n = g.size();

  const std::optional<std::uint64_t> q = inverse_threshold(f, k);
  if (!q) throw PreconditionError("threshold never reaches k; inverse undefined");

  // Literal construction: n' = q, universal = f(q) - k, isolated the rest.
  // When f(q) - k > q - n (in particular whenever q < n) the instance must
  // first be enlarged; scanning n' upward from max(q, n) to the least
  // feasible size folds that padding step into one minimal search and
  // reduces to the literal construction when it was already feasible.
  std::uint64_t np = std::max<std::uint64_t>(*q, n);
  for (;; ++np) {
    if (np > kSampleHorizon)
      throw PreconditionError("embedding scan exhausted its horizon");
    const std::uint64_t v = f.eval(np);
    if (v >= k && v - k <= np - n) break;
  }
  const std::uint64_t universal = f.eval(np) - k;
  const std::uint64_t isolated = (np - n) - universal;

  ReductionOutput out{.graph = add_vertices(g, static_cast<std::size_t>(universal),
                                            static_cast<std::size_t>(isolated)),
                      .construction = Construction::EmbedSublinear,
                      .input_size = g.size()};
  out.request = k;
  out.q = *q;
  out.universal = universal;
  out.isolated = isolated;
  out.n_prime = np;
  out.k_prime = f.eval(np);
  return out;
}

ReductionOutput embed_kclique_linear(const Graph& g, std::uint64_t m, const ThresholdExpr& f) {
  require_nonempty(g);
  require_all_eligible(g);
  if (m == 0) throw PreconditionError("embedding needs m >= 1");
  require_case(f, FunctionCase::Case3_LinearButFarFromN, "the linear embedding");
  const std::uint64_t n = g.size();

  // Least ell with m <= f(n + ell) <= m + ell; exists because f is
  // unbounded while n - f(n) outgrows every constant. No ell below
  // inverse_threshold(f, m) - n can satisfy the lower half, so the scan
  // starts there instead of crawling the gap one step at a time.
  const std::optional<std::uint64_t> reach = inverse_threshold(f, m);
  if (!reach) throw PreconditionError("threshold never reaches m; embedding infeasible");
  std::uint64_t ell = *reach > n ? *reach - n : 0;
  for (;; ++ell) {
    if (n + ell > kSampleHorizon)
      throw PreconditionError("embedding scan exhausted its horizon");
    const std::uint64_t v = f.eval(n + ell);
    if (v >= m && v <= m + ell) break;
  }
  const std::uint64_t val = f.eval(n + ell);
  const std::uint64_t universal = val - m;  // ell'
  const std::uint64_t isolated = ell - universal;

  ReductionOutput out{.graph = add_vertices(g, static_cast<std::size_t>(universal),
                                            static_cast<std::size_t>(isolated)),
                      .construction = Construction::EmbedLinear,
                      .input_size = g.size()};
  out.request = m;
  out.ell = ell;
  out.universal = universal;
  out.isolated = isolated;
  out.n_prime = n + ell;
  out.k_prime = val;
  return out;
}

std::string ReductionOutput::params_text() const {
  std::ostringstream os;
  os << "construction " << to_string(construction) << '\n';
  os << "n " << input_size << '\n';
  switch (construction) {
    case Construction::Pad:
      os << "b " << request << '\n';
      os << "delta " << delta << '\n';
      os << "b-prime " << k_prime << '\n';
      break;
    case Construction::EmbedSublinear:
      os << "k " << request << '\n';
      os << "q " << q << '\n';
      os << "k-prime " << k_prime << '\n';
      break;
    case Construction::EmbedLinear:
      os << "m " << request << '\n';
      os << "ell " << ell << '\n';
      os << "ell-prime " << universal << '\n';
      os << "k-prime " << k_prime << '\n';
      break;
  }
  os << "universal " << universal << '\n';
  os << "isolated " << isolated << '\n';
  os << "n-prime " << n_prime << '\n';
  return os.str();
}

const char* to_string(Construction c) {
  switch (c) {
    case Construction::Pad:
      return "pad";
    case Construction::EmbedSublinear:
      return "embed-sublinear";
    case Construction::EmbedLinear:
      return "embed-linear";
  }
  return "?";
}

}  // namespace ramsey
