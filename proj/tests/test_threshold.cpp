#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <string>
#include <vector>

#include "ramsey/arith.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/threshold.hpp"

using namespace ramsey;

namespace {

std::uint64_t ev(const std::string& src, std::uint64_t n) {
  return eval_threshold(parse_threshold(src), n);
}

// Relational oracles: each rounded operation is pinned down by inequalities
// that need no arithmetic beyond comparison, so they cannot share a bug with
// the formula under test.
bool is_ceil_div(std::uint64_t v, std::uint64_t p, std::uint64_t q, std::uint64_t x) {
  const auto lhs = static_cast<unsigned __int128>(p) * x;
  const auto vq = static_cast<unsigned __int128>(v) * q;
  return vq >= lhs && (v == 0 || vq - q < lhs);
}

bool is_floor_div(std::uint64_t v, std::uint64_t p, std::uint64_t q, std::uint64_t x) {
  const auto lhs = static_cast<unsigned __int128>(p) * x;
  const auto vq = static_cast<unsigned __int128>(v) * q;
  return vq <= lhs && vq + q > lhs;
}

bool is_ceil_log2(std::uint64_t v, std::uint64_t x) {
  if (x <= 1) return v == 0;
  if (v >= 64) return false;
  const std::uint64_t pow = std::uint64_t{1} << v;
  return pow >= x && (v == 0 || pow / 2 < x);
}

bool is_ceil_sqrt(std::uint64_t v, std::uint64_t x) {
  if (x == 0) return v == 0;
  const auto sq = static_cast<unsigned __int128>(v) * v;
  const auto below = static_cast<unsigned __int128>(v - 1) * (v - 1);
  return v >= 1 && sq >= x && below < x;
}

}  // namespace

TEST_CASE("integer helpers satisfy their defining inequalities") {
  for (std::uint64_t x = 0; x <= 3000; ++x) {
    CAPTURE(x);
    CHECK(is_ceil_log2(ceil_log2(x), x));
    CHECK(is_ceil_sqrt(ceil_sqrt(x), x));
    const std::uint64_t fs = floor_sqrt(x);
    CHECK(fs * fs <= x);
    CHECK((fs + 1) * (fs + 1) > x);
  }
  // Around squares and powers of two, where rounding code typically slips.
  for (const std::uint64_t base : {std::uint64_t{1} << 20, std::uint64_t{1} << 32,
                                   std::uint64_t{1} << 40, std::uint64_t{3037000499}}) {
    for (std::uint64_t d = 0; d <= 2; ++d) {
      CHECK(is_ceil_log2(ceil_log2(base + d), base + d));
      const std::uint64_t v = floor_sqrt(base + d);
      CHECK(static_cast<unsigned __int128>(v) * v <= base + d);
      CHECK(static_cast<unsigned __int128>(v + 1) * (v + 1) > base + d);
    }
  }
}

TEST_CASE("scaled rounding matches the relational definition") {
  const std::uint64_t ps[] = {1, 2, 3, 7};
  const std::uint64_t qs[] = {1, 2, 3, 5};
  for (const auto p : ps)
    for (const auto q : qs)
      for (std::uint64_t x = 0; x <= 200; ++x) {
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(x);
        CHECK(is_ceil_div(scaled_ceil(p, q, x), p, q, x));
        CHECK(is_floor_div(scaled_floor(p, q, x), p, q, x));
      }
  CHECK_THROWS_AS(scaled_ceil(UINT64_MAX, 1, UINT64_MAX), CapacityError);
}

TEST_CASE("checked arithmetic reports overflow instead of wrapping") {
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_mul(1u << 30, 1u << 30) == (std::uint64_t{1} << 60));
  CHECK_THROWS_AS(checked_add(UINT64_MAX, 1), CapacityError);
  CHECK_THROWS_AS(checked_mul(UINT64_MAX, 2), CapacityError);
  CHECK(truncated_sub(5, 7) == 0);
  CHECK(truncated_sub(7, 5) == 2);
}

TEST_CASE("parser handles the core forms") {
  CHECK(ev("ceil(log2(n))", 8) == 3);
  CHECK(ev("n - 2*ceil(log2(n))", 16) == 8);
  CHECK(ev("ceil(1/2 * n)", 7) == 4);
  CHECK(ev("ceil(1/2 * n)", 1) == 1);
  CHECK(ev("floor(2/3 * n)", 7) == 4);
  CHECK(ev("ceil(sqrt(n))", 9) == 3);
  CHECK(ev("ceil(sqrt(n))", 10) == 4);
  CHECK(ev("min(n, 3)", 2) == 2);
  CHECK(ev("min(n, 3)", 5) == 3);
  CHECK(ev("max(n, 3)", 2) == 3);
  CHECK(ev("n + 1", 4) == 5);
  CHECK(ev("0", 17) == 0);
  CHECK(ev("(n)", 6) == 6);
}

TEST_CASE("sum, difference, and product semantics are exact and truncated") {
  for (std::uint64_t n = 1; n <= 64; ++n) {
    CHECK(ev("n + n", n) == 2 * n);
    CHECK(ev("n * n", n) == n * n);
    CHECK(ev("3 - n", n) == (3 > n ? 3 - n : 0));
    CHECK(ev("n - 1 - 1", n) == (n >= 2 ? n - 2 : 0));
    CHECK(ev("n - (n - 1)", n) == 1);  // grouping beats left association
  }
}

TEST_CASE("precedence binds product over sum and difference") {
  CHECK(ev("2*n + 1", 5) == 11);
  CHECK(ev("1 + 2*n", 5) == 11);
  CHECK(ev("n - 2*ceil(log2(n))", 1024) == 1004);
  CHECK(parse_threshold("2*n + 1") == parse_threshold("(2*n) + 1"));
  CHECK_FALSE(parse_threshold("2*n + 1") == parse_threshold("2*(n + 1)"));
}

TEST_CASE("whitespace is insignificant") {
  CHECK(parse_threshold("n-2*ceil(log2(n))") == parse_threshold(" n - 2 * ceil( log2( n ) ) "));
}

TEST_CASE("evaluation never rounds through floating point") {
  // 2^53 + 1 is the first integer a double cannot represent; the DSL must
  // evaluate it exactly.
  const std::uint64_t big = (std::uint64_t{1} << 53) + 1;
  const ThresholdExpr f = parse_threshold("n + 1");
  CHECK(eval_threshold(f, big) == big + 1);
  CHECK(eval_threshold(parse_threshold("ceil(sqrt(n))"), big) == 94906266);
  CHECK(is_ceil_sqrt(94906266, big));
}

TEST_CASE("capacity failures are reported, not wrapped") {
  const ThresholdExpr f = parse_threshold("n * n");
  CHECK_THROWS_AS(eval_threshold(f, std::uint64_t{1} << 33), CapacityError);
  CHECK_THROWS_AS(ev("18446744073709551615 + 1", 1), CapacityError);
}

TEST_CASE("eval requires a positive argument") {
  CHECK_THROWS_AS(eval_threshold(parse_threshold("n"), 0), PreconditionError);
}

TEST_CASE("parse errors carry a byte position") {
  const auto pos_of = [](const std::string& src) -> std::size_t {
    try {
      parse_threshold(src);
    } catch (const ParseError& e) {
      return e.position;
    }
    FAIL("expected a parse error for: ", src);
    return SIZE_MAX;
  };
  CHECK(pos_of("") == 0);
  CHECK(pos_of("n +") == 3);
  CHECK(pos_of("foo") == 0);
  CHECK(pos_of("min(n 3)") == 6);     // missing comma
  CHECK(pos_of("ceil(n)") == 5);      // ceil needs log2/sqrt/rational inside
  CHECK(pos_of("n n") == 2);          // trailing junk
  CHECK(pos_of("ceil(1/0 * n)") == 7);
  CHECK_THROWS_WITH_AS(parse_threshold("ceil(1/0 * n)"),
                       "denominator must be nonzero (at position 7)", ParseError);
  CHECK_THROWS_AS(parse_threshold("99999999999999999999999"), ParseError);
}

TEST_CASE("to_string round-trips through the parser") {
  const char* sources[] = {
      "0",
      "n",
      "n + 1",
      "n - 2*ceil(log2(n))",
      "ceil(1/2 * n)",
      "floor(2/3 * n)",
      "ceil(sqrt(n))",
      "ceil(log2(n))",
      "min(max(n, 3), ceil(1/2 * n) + 2)",
      "n - (n - 1)",
      "2*(n + 1)",
      "n - ceil(log2(n))*ceil(log2(n))",
  };
  for (const auto* src : sources) {
    CAPTURE(src);
    const ThresholdExpr f = parse_threshold(src);
    const std::string printed = f.to_string();
    const ThresholdExpr g = parse_threshold(printed);
    CHECK(f == g);
    CHECK(g.to_string() == printed);  // printing is a fixed point
    for (std::uint64_t n = 1; n <= 40; ++n) CHECK(f.eval(n) == g.eval(n));
  }
}

TEST_CASE("structural equality distinguishes shape, not value") {
  CHECK(parse_threshold("n + n") == parse_threshold("n + n"));
  CHECK_FALSE(parse_threshold("n + n") == parse_threshold("2*n"));
  CHECK_FALSE(parse_threshold("ceil(1/2 * n)") == parse_threshold("floor(1/2 * n)"));
}

TEST_CASE("ast accessors expose the tree") {
  const ThresholdExpr f = parse_threshold("ceil(3/4 * n) + 2");
  REQUIRE(f.kind() == ThresholdExpr::Kind::Sum);
  REQUIRE(f.arity() == 2);
  const ThresholdExpr lhs = f.child(0);
  CHECK(lhs.kind() == ThresholdExpr::Kind::Scale);
  CHECK(lhs.numer() == 3);
  CHECK(lhs.denom() == 4);
  CHECK(lhs.rounding() == Rounding::Ceil);
  CHECK(f.child(1).kind() == ThresholdExpr::Kind::Constant);
  CHECK(f.child(1).value() == 2);
  CHECK_THROWS_AS(f.child(2), Error);
}

TEST_CASE("inverse search agrees with a linear scan") {
  const char* sources[] = {"ceil(sqrt(n))", "ceil(log2(n))", "ceil(1/2 * n)", "n", "n + 1", "3"};
  for (const auto* src : sources) {
    const ThresholdExpr f = parse_threshold(src);
    for (std::uint64_t h = 0; h <= 12; ++h) {
      CAPTURE(src);
      CAPTURE(h);
      // independent scan over a window large enough for every h above
      std::optional<std::uint64_t> want;
      for (std::uint64_t q = 1; q <= 5000; ++q)
        if (f.eval(q) >= h) {
          want = q;
          break;
        }
      const auto got = inverse_threshold(f, h);
      if (want) {
        REQUIRE(got.has_value());
        CHECK(*got == *want);
      } else {
        CHECK_FALSE(got.has_value());  // bounded f never reaches h
      }
    }
  }
}

TEST_CASE("inverse examples") {
  CHECK(inverse_threshold(parse_threshold("ceil(sqrt(n))"), 3) == 5);
  CHECK(inverse_threshold(parse_threshold("ceil(log2(n))"), 1) == 2);
  CHECK_FALSE(inverse_threshold(parse_threshold("3"), 7).has_value());
  // h = 0 is satisfied by the smallest admissible argument
  CHECK(inverse_threshold(parse_threshold("n"), 0) == 1);
}

TEST_CASE("inverse postcondition holds on its own output") {
  const ThresholdExpr f = parse_threshold("ceil(log2(n))");
  for (std::uint64_t h = 1; h <= 30; ++h) {
    const auto q = inverse_threshold(f, h);
    REQUIRE(q.has_value());
    CHECK(f.eval(*q) >= h);
    if (*q > 1) CHECK(f.eval(*q - 1) < h);
  }
}

TEST_CASE("validation accepts the admissible shapes") {
  const char* ok[] = {"0",          "1",
                      "2",          "3",
                      "n",          "n + 1",
                      "ceil(log2(n))", "ceil(sqrt(n))",
                      "ceil(1/2 * n)", "n - ceil(log2(n))",
                      "n - 2*ceil(log2(n))", "min(n, 10)",
                      "max(3, ceil(sqrt(n)))", "floor(3/4 * n)"};
  for (const auto* src : ok) {
    CAPTURE(src);
    CHECK_NOTHROW(validate_threshold(parse_threshold(src)));
  }
}

TEST_CASE("validation proves monotonicity exactly for difference-free trees") {
  CHECK(validate_threshold(parse_threshold("ceil(1/2 * n) + ceil(log2(n))")).monotone_proved);
  CHECK(validate_threshold(parse_threshold("min(n, max(3, ceil(sqrt(n))))")).monotone_proved);
  CHECK_FALSE(validate_threshold(parse_threshold("n - 1")).monotone_proved);
  CHECK_FALSE(validate_threshold(parse_threshold("min(n, n - ceil(log2(n)))")).monotone_proved);
}

TEST_CASE("validation rejects decreasing functions with the offending pair") {
  CHECK_THROWS_WITH_AS(validate_threshold(parse_threshold("3 - n")),
                       "threshold decreases between n=1 and n=2 without recovering",
                       ValidationError);
  CHECK_THROWS_AS(validate_threshold(parse_threshold("10 - n")), ValidationError);
  // A dip that recovers is an asymptotically nondecreasing function; the
  // near-n family dips by one just past powers of two.
  CHECK_NOTHROW(validate_threshold(parse_threshold("n - 2*ceil(log2(n))")));
}

TEST_CASE("validation rejects functions that outgrow n+1") {
  CHECK_THROWS_AS(validate_threshold(parse_threshold("n + 2")), ValidationError);
  CHECK_THROWS_AS(validate_threshold(parse_threshold("2*n")), ValidationError);
  // A large constant exceeds n+1 only on a prefix; the quantifier is simply
  // false there, so the function stays admissible.
  CHECK_NOTHROW(validate_threshold(parse_threshold("100")));
  CHECK_NOTHROW(validate_threshold(parse_threshold("n + 1")));
}

TEST_CASE("doubling schedule spans 2^1 .. 2^40") {
  const auto sched = doubling_schedule();
  REQUIRE(sched.size() == 40);
  CHECK(sched.front() == 2);
  CHECK(sched.back() == kSampleHorizon);
  for (std::size_t i = 1; i < sched.size(); ++i) CHECK(sched[i] == 2 * sched[i - 1]);
}
