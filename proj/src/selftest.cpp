#include "ramsey/selftest.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "ramsey/generators.hpp"
#include "ramsey/io.hpp"

namespace ramsey {

namespace {

constexpr double kDensities[] = {0.1, 0.3, 0.5, 0.7, 0.9};

std::string to_dimacs(const Graph& g) {
  std::ostringstream os;
  save_graph(os, g);
  return os.str();
}

}  // namespace

const std::vector<std::string>& equivalence_suite() {
  static const std::vector<std::string> suite = {
      "0",
      "1",
      "2",
      "3",
      "ceil(log2(n))",
      "ceil(sqrt(n))",
      "ceil(1/2 * n)",
      "n - ceil(log2(n))",
      "n",
      "n + 1",
  };
  return suite;
}

OracleCheckReport run_oracle_check(const OracleCheckConfig& config) {
  OracleCheckReport report;
  const std::size_t max_n = std::min(config.max_n, kOracleLimit);

  std::vector<ThresholdExpr> fns;
  for (const auto& src : equivalence_suite()) fns.push_back(parse_threshold(src));

  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::size_t trials = n <= 6 ? config.trials_small : config.trials_large;
    for (std::size_t t = 0; t < trials; ++t) {
      std::mt19937_64 rng(mix_seed(config.seed, n, t));
      const Graph g = gnp_graph(n, kDensities[t % std::size(kDensities)], rng);
      for (std::size_t fi = 0; fi < fns.size(); ++fi) {
        const ThresholdExpr& f = fns[fi];
        const std::size_t k = static_cast<std::size_t>(eval_threshold(f, n));
        const Certificate want = clique_oracle(g, k);
        const auto check = [&](const char* name, const Certificate& got) {
          ++report.checks;
          const bool bad_answer = got.outcome != want.outcome;
          const bool bad_witness = got.holds() && !verify_certificate(g, k, got);
          if (bad_answer || bad_witness) {
            std::ostringstream detail;
            detail << name << " says " << to_string(got.outcome) << ", oracle says "
                   << to_string(want.outcome) << " for k=" << k << " on n=" << n
                   << (bad_witness ? " (witness failed verification)" : "");
            report.disagreements.push_back(
                {equivalence_suite()[fi], to_dimacs(g), detail.str()});
          }
        };
        check("eval_ramsey", eval_ramsey(g, f, config.eval));
        if (config.engines) {
          if (k <= kEnumerationCutoff) check("enumeration", clique_by_enumeration(g, k));
          check("vertex-cover", clique_by_vertex_cover(g, k));
          check("branch-and-bound", clique_by_branch_and_bound(g, k));
        }
      }
    }
  }
  return report;
}

}  // namespace ramsey
