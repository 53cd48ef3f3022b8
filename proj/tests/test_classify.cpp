#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <string>

#include "ramsey/arith.hpp"
#include "ramsey/classify.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/threshold.hpp"

using namespace ramsey;

namespace {

FunctionClass cls(const std::string& src) { return classify(parse_threshold(src)); }

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return b == 0 ? 0 : (a + b - 1) / b; }

// The sampled-evidence meaning of each witnessed case, recomputed from the
// function itself so the classifier cannot vouch for its own claim.
void check_case1_evidence(const ThresholdExpr& f, const FunctionClass& c) {
  REQUIRE(c.case_ == FunctionCase::Case1_Bounded);
  for (const std::uint64_t n : doubling_schedule())
    if (n >= c.n0) CHECK(eval_threshold(f, n) <= c.witness_c);
}

void check_case4_evidence(const ThresholdExpr& f, const FunctionClass& c) {
  REQUIRE(c.case_ == FunctionCase::Case4_NearN);
  for (const std::uint64_t n : doubling_schedule())
    if (n >= c.n0) {
      const std::uint64_t v = eval_threshold(f, n);
      CHECK(v + c.witness_c * ceil_log2(n) >= n);
    }
}

}  // namespace

TEST_CASE("bounded functions land in case 1 with the least bound as witness") {
  const FunctionClass c = cls("3");
  CHECK(c.case_ == FunctionCase::Case1_Bounded);
  CHECK(c.certainty == Certainty::Proved);
  CHECK(c.witness_c == 3);
  check_case1_evidence(parse_threshold("3"), c);

  const FunctionClass zero = cls("0");
  CHECK(zero.case_ == FunctionCase::Case1_Bounded);
  CHECK(zero.witness_c == 0);

  const FunctionClass capped = cls("min(n, 10)");
  CHECK(capped.case_ == FunctionCase::Case1_Bounded);
  CHECK(capped.certainty == Certainty::Proved);
  CHECK(capped.witness_c == 10);
}

TEST_CASE("sublinear unbounded functions land in case 2") {
  for (const char* src : {"ceil(log2(n))", "ceil(sqrt(n))", "max(3, ceil(sqrt(n)))",
                          "ceil(log2(n))*ceil(log2(n))", "ceil(sqrt(ceil(sqrt(n))))"}) {
    CAPTURE(src);
    const FunctionClass c = cls(src);
    CHECK(c.case_ == FunctionCase::Case2_SublinearUnbounded);
  }
  CHECK(cls("ceil(log2(n))").certainty == Certainty::Proved);
  CHECK(cls("ceil(sqrt(n))").certainty == Certainty::Proved);
}

TEST_CASE("case 2 witness schedule records genuine sublinearity evidence") {
  const FunctionClass c = cls("ceil(sqrt(n))");
  REQUIRE_FALSE(c.schedule.empty());
  // s(n) = n / f(n) must be recomputable and unbounded along the schedule.
  const ThresholdExpr f = parse_threshold("ceil(sqrt(n))");
  for (const auto& [n, s] : c.schedule) {
    CHECK(s == n / std::max<std::uint64_t>(eval_threshold(f, n), 1));
  }
  CHECK(c.schedule.back().second > 4 * c.schedule.front().second);
}

TEST_CASE("proportional and near-linear-with-superlog-gap functions land in case 3") {
  for (const char* src :
       {"ceil(1/2 * n)", "ceil(2/3 * n)", "floor(1/3 * n)", "n - ceil(log2(n))*ceil(log2(n))"}) {
    CAPTURE(src);
    const FunctionClass c = cls(src);
    CHECK(c.case_ == FunctionCase::Case3_LinearButFarFromN);
    CHECK(c.certainty == Certainty::Proved);
  }
}

TEST_CASE("case 3 witnesses bound the function linearly and show gap divergence") {
  const ThresholdExpr f = parse_threshold("ceil(1/2 * n)");
  const FunctionClass c = classify(f);
  REQUIRE(c.case_ == FunctionCase::Case3_LinearButFarFromN);
  CHECK(c.omega_constant == 2);  // f(n) >= n / 2 on the sampled tail
  for (const std::uint64_t n : doubling_schedule())
    if (n >= c.n0)
      CHECK(eval_threshold(f, n) * c.omega_constant >= n);
  // gap ratio (n - f(n)) / ceil(log2 n) recorded and diverging
  REQUIRE(c.schedule.size() >= 2);
  CHECK(c.schedule.back().second > 2 * c.schedule.front().second);
}

TEST_CASE("near-n functions land in case 4 with the gap constant as witness") {
  const ThresholdExpr f = parse_threshold("n - 2*ceil(log2(n))");
  const FunctionClass c = classify(f);
  CHECK(c.case_ == FunctionCase::Case4_NearN);
  CHECK(c.certainty == Certainty::Proved);
  CHECK(c.witness_c == 2);
  CHECK(c.n0 == 2);
  check_case4_evidence(f, c);

  const FunctionClass ident = cls("n");
  CHECK(ident.case_ == FunctionCase::Case4_NearN);
  CHECK(ident.witness_c == 0);
  check_case4_evidence(parse_threshold("n"), ident);

  const FunctionClass succ = cls("n + 1");
  CHECK(succ.case_ == FunctionCase::Case4_NearN);
  CHECK(succ.witness_c == 0);

  const FunctionClass one_log = cls("n - ceil(log2(n))");
  CHECK(one_log.case_ == FunctionCase::Case4_NearN);
  CHECK(one_log.witness_c == 1);
  check_case4_evidence(parse_threshold("n - ceil(log2(n))"), one_log);
}

TEST_CASE("every admissible function gets exactly one case") {
  const char* suite[] = {"0",
                         "1",
                         "2",
                         "3",
                         "ceil(log2(n))",
                         "ceil(sqrt(n))",
                         "ceil(1/2 * n)",
                         "n - ceil(log2(n))",
                         "n",
                         "n + 1",
                         "min(n, 50)",
                         "max(ceil(sqrt(n)), ceil(log2(n)))",
                         "n - 2*ceil(log2(n))",
                         "floor(2/3 * n)"};
  for (const auto* src : suite) {
    CAPTURE(src);
    const FunctionClass c = cls(src);
    const bool one = c.case_ == FunctionCase::Case1_Bounded ||
                     c.case_ == FunctionCase::Case2_SublinearUnbounded ||
                     c.case_ == FunctionCase::Case3_LinearButFarFromN ||
                     c.case_ == FunctionCase::Case4_NearN;
    CHECK(one);
    CHECK(c.poly_time);
  }
}

TEST_CASE("classification refuses inadmissible functions") {
  CHECK_THROWS_AS(cls("n + 2"), ValidationError);
  CHECK_THROWS_AS(cls("3 - n"), ValidationError);
}

TEST_CASE("sampled classification handles functions outside the expression language") {
  // ceil(n / log2(n)): sublinear with a slowly growing s(n) = log2(n).
  const auto ratio_log = [](std::uint64_t n) {
    return ceil_div(n, std::max<std::uint64_t>(ceil_log2(n), 1));
  };
  const FunctionClass c = classify_sampled(ratio_log, true);
  CHECK(c.case_ == FunctionCase::Case2_SublinearUnbounded);
  CHECK(c.certainty == Certainty::Empirical);
  CHECK(c.poly_time);
  CHECK(c.horizon == kSampleHorizon);

  // n - ceil(n / log2(n)): linear lower bound with superlogarithmic gap.
  const auto near_linear = [&](std::uint64_t n) { return n - std::min(ratio_log(n), n); };
  const FunctionClass d = classify_sampled(near_linear, true);
  CHECK(d.case_ == FunctionCase::Case3_LinearButFarFromN);
  CHECK(d.certainty == Certainty::Empirical);

  const auto plateau = [](std::uint64_t n) { return std::min<std::uint64_t>(n, 7); };
  const FunctionClass e = classify_sampled(plateau, true);
  CHECK(e.case_ == FunctionCase::Case1_Bounded);
  CHECK(e.witness_c == 7);

  const auto near_n = [](std::uint64_t n) { return n - std::min<std::uint64_t>(n, 3); };
  const FunctionClass g = classify_sampled(near_n, true);
  CHECK(g.case_ == FunctionCase::Case4_NearN);
  CHECK(g.witness_c <= 3);
}

TEST_CASE("verdicts follow the case split") {
  const Verdict v1 = dichotomy_verdict(cls("3"));
  CHECK(v1.tractable);
  CHECK(v1.reason == VerdictReason::ConstantLogBounded);
  CHECK(v1.assumption == Assumption::None);

  const Verdict v2 = dichotomy_verdict(cls("ceil(log2(n))"));
  CHECK_FALSE(v2.tractable);
  CHECK(v2.reason == VerdictReason::SublinearUnbounded_ETH);
  CHECK(v2.assumption == Assumption::ETH);

  const Verdict v3 = dichotomy_verdict(cls("ceil(1/2 * n)"));
  CHECK_FALSE(v3.tractable);
  CHECK(v3.reason == VerdictReason::LinearNotCLB_ETH);
  CHECK(v3.assumption == Assumption::ETH);

  const Verdict v4 = dichotomy_verdict(cls("n - 2*ceil(log2(n))"));
  CHECK(v4.tractable);
  CHECK(v4.reason == VerdictReason::ConstantLogBounded);
  CHECK(v4.assumption == Assumption::None);

  const Verdict v0 = dichotomy_verdict(cls("0"));
  CHECK(v0.tractable);
}

TEST_CASE("tractable if and only if constant-log-bounded") {
  const char* suite[] = {"0", "3", "ceil(log2(n))", "ceil(sqrt(n))", "ceil(1/2 * n)",
                         "n", "n + 1", "n - 2*ceil(log2(n))", "min(n, 9)"};
  for (const auto* src : suite) {
    CAPTURE(src);
    const Verdict v = dichotomy_verdict(cls(src));
    CHECK(v.tractable == (v.reason == VerdictReason::ConstantLogBounded));
    CHECK((v.assumption == Assumption::None) == v.tractable);
  }
}

TEST_CASE("undeclared computability blocks tractability unconditionally") {
  const auto f = [](std::uint64_t) { return std::uint64_t{2}; };
  const FunctionClass c = classify_sampled(f, false);
  CHECK(c.case_ == FunctionCase::Case1_Bounded);
  CHECK_FALSE(c.poly_time);
  const Verdict v = dichotomy_verdict(c);
  CHECK_FALSE(v.tractable);
  CHECK(v.reason == VerdictReason::NotPolyComputable);
  CHECK(v.assumption == Assumption::None);
}

TEST_CASE("enum labels print stable names") {
  CHECK(std::string(to_string(FunctionCase::Case1_Bounded)) == "case1-bounded");
  CHECK(std::string(to_string(FunctionCase::Case2_SublinearUnbounded)) ==
        "case2-sublinear-unbounded");
  CHECK(std::string(to_string(FunctionCase::Case3_LinearButFarFromN)) ==
        "case3-linear-but-far-from-n");
  CHECK(std::string(to_string(FunctionCase::Case4_NearN)) == "case4-near-n");
  CHECK(std::string(to_string(Certainty::Proved)) == "proved");
  CHECK(std::string(to_string(Certainty::Empirical)) == "empirical");
  CHECK(std::string(to_string(Assumption::ETH)) == "eth");
  CHECK(std::string(to_string(Assumption::None)) == "none");
}
