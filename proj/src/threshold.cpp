#include "ramsey/threshold.hpp"

#include <cctype>
#include <utility>

#include "ramsey/arith.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

struct ThresholdExpr::Node {
  Kind kind;
  std::uint64_t value = 0;  // Constant k, or Scale numerator
  std::uint64_t denom = 1;  // Scale denominator
  Rounding rounding = Rounding::Ceil;
  std::shared_ptr<const Node> left, right;
};

namespace {

std::shared_ptr<ThresholdExpr::Node> make_node(ThresholdExpr::Kind kind) {
  auto n = std::make_shared<ThresholdExpr::Node>();
  n->kind = kind;
  return n;
}

}  // namespace

ThresholdExpr ThresholdExpr::constant(std::uint64_t k) {
  auto n = make_node(Kind::Constant);
  n->value = k;
  return ThresholdExpr(std::move(n));
}

ThresholdExpr ThresholdExpr::variable() { return ThresholdExpr(make_node(Kind::Variable)); }

ThresholdExpr ThresholdExpr::sum(ThresholdExpr a, ThresholdExpr b) {
  auto n = make_node(Kind::Sum);
  n->left = std::move(a.node_);
  n->right = std::move(b.node_);
  return ThresholdExpr(std::move(n));
}

ThresholdExpr ThresholdExpr::difference(ThresholdExpr a, ThresholdExpr b) {
  auto n = make_node(Kind::Difference);
  n->left = std::move(a.node_);
  n->right = std::move(b.node_);
  return ThresholdExpr(std::move(n));
}

ThresholdExpr ThresholdExpr::product(ThresholdExpr a, ThresholdExpr b) {
  auto n = make_node(Kind::Product);
  n->left = std::move(a.node_);
  n->right = std::move(b.node_);
  return ThresholdExpr(std::move(n));
}

ThresholdExpr ThresholdExpr::scale(std::uint64_t p, std::uint64_t q, Rounding r, ThresholdExpr a) {
  if (q == 0) throw ValidationError("scale denominator must be nonzero");
  auto n = make_node(Kind::Scale);
  n->value = p;
  n->denom = q;
  n->rounding = r;
  n->left = std::move(a.node_);
  return ThresholdExpr(std::move(n));
}

ThresholdExpr ThresholdExpr::ceil_log2_of(ThresholdExpr a) {
  auto n = make_node(Kind::CeilLog2);
  n->left = std::move(a.node_);
  return ThresholdExpr(std::move(n));
}

ThresholdExpr ThresholdExpr::ceil_sqrt_of(ThresholdExpr a) {
  auto n = make_node(Kind::CeilSqrt);
  n->left = std::move(a.node_);
  return ThresholdExpr(std::move(n));
}

ThresholdExpr ThresholdExpr::min_of(ThresholdExpr a, ThresholdExpr b) {
  auto n = make_node(Kind::Min);
  n->left = std::move(a.node_);
  n->right = std::move(b.node_);
  return ThresholdExpr(std::move(n));
}

ThresholdExpr ThresholdExpr::max_of(ThresholdExpr a, ThresholdExpr b) {
  auto n = make_node(Kind::Max);
  n->left = std::move(a.node_);
  n->right = std::move(b.node_);
  return ThresholdExpr(std::move(n));
}

ThresholdExpr::Kind ThresholdExpr::kind() const { return node_->kind; }
std::uint64_t ThresholdExpr::value() const { return node_->value; }
std::uint64_t ThresholdExpr::numer() const { return node_->value; }
std::uint64_t ThresholdExpr::denom() const { return node_->denom; }
Rounding ThresholdExpr::rounding() const { return node_->rounding; }

std::size_t ThresholdExpr::arity() const {
  switch (node_->kind) {
    case Kind::Constant:
    case Kind::Variable:
      return 0;
    case Kind::Scale:
    case Kind::CeilLog2:
    case Kind::CeilSqrt:
      return 1;
    default:
      return 2;
  }
}

ThresholdExpr ThresholdExpr::child(std::size_t i) const {
  if (i >= arity()) throw Error("child index out of range");
  return ThresholdExpr(i == 0 ? node_->left : node_->right);
}

namespace {

std::uint64_t eval_node(const ThresholdExpr::Node& node, std::uint64_t n) {
  using Kind = ThresholdExpr::Kind;
  switch (node.kind) {
    case Kind::Constant:
      return node.value;
    case Kind::Variable:
      return n;
    case Kind::Sum:
      return checked_add(eval_node(*node.left, n), eval_node(*node.right, n));
    case Kind::Difference:
      return truncated_sub(eval_node(*node.left, n), eval_node(*node.right, n));
    case Kind::Product:
      return checked_mul(eval_node(*node.left, n), eval_node(*node.right, n));
    case Kind::Scale: {
      const std::uint64_t x = eval_node(*node.left, n);
      return node.rounding == Rounding::Ceil ? scaled_ceil(node.value, node.denom, x)
                                             : scaled_floor(node.value, node.denom, x);
    }
    case Kind::CeilLog2:
      return ceil_log2(eval_node(*node.left, n));
    case Kind::CeilSqrt:
      return ceil_sqrt(eval_node(*node.left, n));
    case Kind::Min: {
      const std::uint64_t a = eval_node(*node.left, n);
      const std::uint64_t b = eval_node(*node.right, n);
      return a < b ? a : b;
    }
    case Kind::Max: {
      const std::uint64_t a = eval_node(*node.left, n);
      const std::uint64_t b = eval_node(*node.right, n);
      return a > b ? a : b;
    }
  }
  throw Error("corrupt expression node");
}

}  // namespace

std::uint64_t ThresholdExpr::eval(std::uint64_t n) const { return eval_node(*node_, n); }

namespace {

// Printing precedence: additive 0, multiplicative 1, atoms 2. The right
// operand of a difference is printed one level tighter so that a - (b - c)
// and a - (b + c) keep their parentheses.
int print_prec(ThresholdExpr::Kind k) {
  using Kind = ThresholdExpr::Kind;
  switch (k) {
    case Kind::Sum:
    case Kind::Difference:
      return 0;
    case Kind::Product:
      return 1;
    default:
      return 2;
  }
}

void print_node(const ThresholdExpr::Node& node, int min_prec, std::string& out) {
  using Kind = ThresholdExpr::Kind;
  const int prec = print_prec(node.kind);
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (node.kind) {
    case Kind::Constant:
      out += std::to_string(node.value);
      break;
    case Kind::Variable:
      out += 'n';
      break;
    case Kind::Sum:
      print_node(*node.left, 0, out);
      out += " + ";
      print_node(*node.right, 1, out);
      break;
    case Kind::Difference:
      print_node(*node.left, 0, out);
      out += " - ";
      print_node(*node.right, 1, out);
      break;
    case Kind::Product:
      print_node(*node.left, 1, out);
      out += " * ";
      print_node(*node.right, 2, out);
      break;
    case Kind::Scale:
      out += node.rounding == Rounding::Ceil ? "ceil(" : "floor(";
      out += std::to_string(node.value);
      out += '/';
      out += std::to_string(node.denom);
      out += " * ";
      print_node(*node.left, 0, out);
      out += ')';
      break;
    case Kind::CeilLog2:
      out += "ceil(log2(";
      print_node(*node.left, 0, out);
      out += "))";
      break;
    case Kind::CeilSqrt:
      out += "ceil(sqrt(";
      print_node(*node.left, 0, out);
      out += "))";
      break;
    case Kind::Min:
      out += "min(";
      print_node(*node.left, 0, out);
      out += ", ";
      print_node(*node.right, 0, out);
      out += ')';
      break;
    case Kind::Max:
      out += "max(";
      print_node(*node.left, 0, out);
      out += ", ";
      print_node(*node.right, 0, out);
      out += ')';
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string ThresholdExpr::to_string() const {
  std::string out;
  print_node(*node_, 0, out);
  return out;
}

namespace {

bool nodes_equal(const ThresholdExpr::Node& a, const ThresholdExpr::Node& b) {
  if (a.kind != b.kind) return false;
  if (a.value != b.value || a.denom != b.denom || a.rounding != b.rounding) return false;
  if ((a.left == nullptr) != (b.left == nullptr)) return false;
  if ((a.right == nullptr) != (b.right == nullptr)) return false;
  if (a.left && !nodes_equal(*a.left, *b.left)) return false;
  if (a.right && !nodes_equal(*a.right, *b.right)) return false;
  return true;
}

}  // namespace

bool ThresholdExpr::operator==(const ThresholdExpr& other) const {
  return nodes_equal(*node_, *other.node_);
}

// ---------------------------------------------------------------------------
// Parser: recursive descent over
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := integer | 'n'
//           | 'ceil(' rational '*' expr ')' | 'floor(' rational '*' expr ')'
//           | 'ceil(log2(' expr '))' | 'ceil(sqrt(' expr '))'
//           | 'min(' expr ',' expr ')' | 'max(' expr ',' expr ')'
//           | '(' expr ')'
//   rational := integer '/' integer | integer

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ThresholdExpr parse() {
    ThresholdExpr e = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool eat(char c) {
    if (!peek_is(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c, const char* ctx) {
    if (!eat(c)) fail(std::string("expected '") + c + "' " + ctx);
  }

  // Lexes a lowercase identifier without consuming it.
  std::string_view peek_word() {
    skip_ws();
    std::size_t end = pos_;
    while (end < src_.size() && (std::islower(static_cast<unsigned char>(src_[end])) ||
                                 std::isdigit(static_cast<unsigned char>(src_[end]))))
      ++end;
    return src_.substr(pos_, end - pos_);
  }

  std::uint64_t parse_integer() {
    skip_ws();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      fail("expected an integer");
    std::uint64_t v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      const std::uint64_t d = static_cast<std::uint64_t>(src_[pos_] - '0');
      if (v > (UINT64_MAX - d) / 10) fail("integer literal too large");
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  ThresholdExpr parse_expr() {
    ThresholdExpr e = parse_term();
    for (;;) {
      if (eat('+'))
        e = ThresholdExpr::sum(std::move(e), parse_term());
      else if (eat('-'))
        e = ThresholdExpr::difference(std::move(e), parse_term());
      else
        return e;
    }
  }

  ThresholdExpr parse_term() {
    ThresholdExpr e = parse_factor();
    while (eat('*')) e = ThresholdExpr::product(std::move(e), parse_factor());
    return e;
  }

  ThresholdExpr parse_rounded(Rounding rounding) {
    expect('(', rounding == Rounding::Ceil ? "after 'ceil'" : "after 'floor'");
    if (rounding == Rounding::Ceil) {
      const std::string_view inner = peek_word();
      if (inner == "log2" || inner == "sqrt") {
        pos_ += inner.size();
        expect('(', "after inner function name");
        ThresholdExpr arg = parse_expr();
        expect(')', "closing the inner argument");
        expect(')', "closing 'ceil'");
        return inner == "log2" ? ThresholdExpr::ceil_log2_of(std::move(arg))
                               : ThresholdExpr::ceil_sqrt_of(std::move(arg));
      }
    }
    const std::uint64_t p = parse_integer();
    std::uint64_t q = 1;
    if (eat('/')) {
      skip_ws();
      const std::size_t qpos = pos_;
      q = parse_integer();
      if (q == 0) throw ParseError("denominator must be nonzero", qpos);
    }
    expect('*', "after the rational coefficient");
    ThresholdExpr arg = parse_expr();
    expect(')', rounding == Rounding::Ceil ? "closing 'ceil'" : "closing 'floor'");
    return ThresholdExpr::scale(p, q, rounding, std::move(arg));
  }

  ThresholdExpr parse_factor() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return ThresholdExpr::constant(parse_integer());
    if (c == '(') {
      ++pos_;
      ThresholdExpr e = parse_expr();
      expect(')', "closing a parenthesized expression");
      return e;
    }
    const std::string_view word = peek_word();
    if (word == "n") {
      ++pos_;
      return ThresholdExpr::variable();
    }
    if (word == "ceil") {
      pos_ += word.size();
      return parse_rounded(Rounding::Ceil);
    }
    if (word == "floor") {
      pos_ += word.size();
      return parse_rounded(Rounding::Floor);
    }
    if (word == "min" || word == "max") {
      pos_ += word.size();
      expect('(', "after 'min'/'max'");
      ThresholdExpr a = parse_expr();
      expect(',', "between min/max arguments");
      ThresholdExpr b = parse_expr();
      expect(')', "closing 'min'/'max'");
      return word == "min" ? ThresholdExpr::min_of(std::move(a), std::move(b))
                           : ThresholdExpr::max_of(std::move(a), std::move(b));
    }
    if (!word.empty()) fail("unknown name '" + std::string(word) + "'");
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

ThresholdExpr parse_threshold(std::string_view source) { return Parser(source).parse(); }

std::uint64_t eval_threshold(const ThresholdExpr& f, std::uint64_t n) {
  if (n == 0) throw PreconditionError("threshold argument must be >= 1");
  return f.eval(n);
}

std::vector<std::uint64_t> doubling_schedule() {
  std::vector<std::uint64_t> s;
  s.reserve(40);
  for (int j = 1; j <= 40; ++j) s.push_back(std::uint64_t{1} << j);
  return s;
}

std::optional<std::uint64_t> inverse_threshold(const ThresholdExpr& f, std::uint64_t h) {
  std::uint64_t lo = 1, hi = 1;
  while (f.eval(hi) < h) {
    if (hi >= kSampleHorizon) return std::nullopt;
    lo = hi + 1;
    hi = hi * 2 < kSampleHorizon ? hi * 2 : kSampleHorizon;
  }
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (f.eval(mid) >= h)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

namespace {

bool has_difference(const ThresholdExpr& e) {
  if (e.kind() == ThresholdExpr::Kind::Difference) return true;
  for (std::size_t i = 0; i < e.arity(); ++i)
    if (has_difference(e.child(i))) return true;
  return false;
}

}  // namespace

ValidationReport validate_threshold(const ThresholdExpr& f) {
  // Every DSL atom other than truncated difference maps nondecreasing inputs
  // to nondecreasing outputs, so a difference-free tree is nondecreasing
  // outright. Sampling still covers both properties as a belt.
  ValidationReport report{.monotone_proved = !has_difference(f)};

  // Both properties are enforced asymptotically, because each has harmless
  // transient violations in perfectly usable functions. f(n) > n+1 at a few
  // small sizes only means the quantifier is false there (a constant exceeds
  // n+1 on a short prefix); a near-n function like n - 2*ceil(log2(n)) dips
  // by one just past each power of two and recovers. What gets rejected is a
  // violation still standing at the end of the schedule: a bound violation at
  // the final sample, or a final value below the running maximum.
  std::uint64_t last_bound_violation = 0;                // 0: none seen
  std::uint64_t running_max = f.eval(1);
  std::uint64_t dip_from = 0, dip_to = 0;                // first decreasing pair
  if (running_max > 2) last_bound_violation = 1;
  std::uint64_t prev = running_max, prev_n = 1;
  const auto step = [&](std::uint64_t n) {
    const std::uint64_t v = f.eval(n);
    if (v < prev && dip_to == 0) {
      dip_from = prev_n;
      dip_to = n;
    }
    if (v > n + 1) last_bound_violation = n;
    running_max = std::max(running_max, v);
    prev = v;
    prev_n = n;
  };
  for (std::uint64_t n = 2; n <= 4096; ++n) step(n);
  for (const std::uint64_t n : doubling_schedule())
    if (n > prev_n) step(n);
  if (prev < running_max)
    throw ValidationError("threshold decreases between n=" + std::to_string(dip_from) +
                          " and n=" + std::to_string(dip_to) + " without recovering");
  if (last_bound_violation == prev_n)
    throw ValidationError("threshold exceeds n+1 at n=" + std::to_string(last_bound_violation) +
                          " and onward");
  return report;
}

}  // namespace ramsey
