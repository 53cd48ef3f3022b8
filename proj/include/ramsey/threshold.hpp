#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

// Rounding mode of a rational scale node ceil((p/q)*x) / floor((p/q)*x).
enum class Rounding { Ceil, Floor };

// Threshold function f : N -> N as an abstract syntax tree of the expression
// DSL (grammar in the README). Values are computed in exact 64-bit integer
// arithmetic; no floating point is involved anywhere. Subtraction is
// truncated at zero. Immutable; copies share structure.
class ThresholdExpr {
 public:
  enum class Kind {
    Constant,    // literal k
    Variable,    // n
    Sum,         // a + b
    Difference,  // max(0, a - b)
    Product,     // a * b
    Scale,       // ceil((p/q)*a) or floor((p/q)*a)
    CeilLog2,    // ceil(log2(a)), with ceil(log2(0)) = ceil(log2(1)) = 0
    CeilSqrt,    // ceil(sqrt(a))
    Min,
    Max,
  };

  static ThresholdExpr constant(std::uint64_t k);
  static ThresholdExpr variable();
  static ThresholdExpr sum(ThresholdExpr a, ThresholdExpr b);
  static ThresholdExpr difference(ThresholdExpr a, ThresholdExpr b);
  static ThresholdExpr product(ThresholdExpr a, ThresholdExpr b);
  static ThresholdExpr scale(std::uint64_t p, std::uint64_t q, Rounding r, ThresholdExpr a);
  static ThresholdExpr ceil_log2_of(ThresholdExpr a);
  static ThresholdExpr ceil_sqrt_of(ThresholdExpr a);
  static ThresholdExpr min_of(ThresholdExpr a, ThresholdExpr b);
  static ThresholdExpr max_of(ThresholdExpr a, ThresholdExpr b);

  Kind kind() const;
  std::uint64_t value() const;  // Constant only
  std::uint64_t numer() const;  // Scale only
  std::uint64_t denom() const;  // Scale only
  Rounding rounding() const;    // Scale only
  std::size_t arity() const;
  ThresholdExpr child(std::size_t i) const;  // shares structure with *this

  std::uint64_t eval(std::uint64_t n) const;
  std::string to_string() const;  // canonical DSL text; reparses to an equal tree

  bool operator==(const ThresholdExpr& other) const;  // structural

  struct Node;  // implementation detail, defined out of line

 private:
  explicit ThresholdExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Parses DSL text. Whitespace is insignificant. Raises ParseError (with a
// byte offset) on malformed text and on a zero denominator.
ThresholdExpr parse_threshold(std::string_view source);

// f(n); n >= 1. Raises CapacityError if an intermediate value exceeds 64 bits.
std::uint64_t eval_threshold(const ThresholdExpr& f, std::uint64_t n);

// Largest argument the sampling schedules touch.
inline constexpr std::uint64_t kSampleHorizon = std::uint64_t{1} << 40;

// The doubling schedule 2^1 .. 2^40 shared by validation and classification.
std::vector<std::uint64_t> doubling_schedule();

// min{q >= 1 : f(q) >= h} by exponential-then-binary search, for
// nondecreasing f (validated by the caller). nullopt when no q up to
// kSampleHorizon qualifies, i.e. f tops out below h.
std::optional<std::uint64_t> inverse_threshold(const ThresholdExpr& f, std::uint64_t h);

struct ValidationReport {
  // true: monotonicity proved symbolically (every node preserves it);
  // false: the tree has a truncated difference, so monotonicity rests on the
  // sampled evidence only.
  bool monotone_proved;
};

// Admission check for quantifier use: f must be nondecreasing and satisfy
// f(n) <= n+1 on n = 1..4096 and on the doubling schedule. Raises
// ValidationError on a violation.
ValidationReport validate_threshold(const ThresholdExpr& f);

}  // namespace ramsey
