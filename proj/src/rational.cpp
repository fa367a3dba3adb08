#include "pathpack/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

namespace pathpack {

const char* errc_name(errc c) {
  switch (c) {
    case errc::unknown_node: return "UnknownNode";
    case errc::unknown_terminal: return "UnknownTerminal";
    case errc::same_terminal: return "SameTerminal";
    case errc::empty_set: return "EmptySet";
    case errc::bad_partition: return "BadPartition";
    case errc::path_not_in_graph: return "PathNotInGraph";
    case errc::too_many_paths: return "TooManyPaths";
    case errc::too_many_expansions: return "TooManyExpansions";
    case errc::search_budget_exceeded: return "SearchBudgetExceeded";
    case errc::switch_creates_closed_walk: return "SwitchCreatesClosedWalk";
    case errc::switch_creates_non_simple_walk: return "SwitchCreatesNonSimpleWalk";
    case errc::class_pattern_mismatch: return "ClassPatternMismatch";
    case errc::no_common_inner_node: return "NoCommonInnerNode";
    case errc::not_maximum_flow: return "NotMaximumFlow";
    case errc::odd_degree: return "OddDegree";
    case errc::not_inner: return "NotInner";
    case errc::bad_pairing: return "BadPairing";
    case errc::not_eulerian: return "NotEulerian";
    case errc::not_dual_solution: return "NotDualSolution";
    case errc::half_integer_gap_detected: return "HalfIntegerGapDetected";
    case errc::common_solution_gap_detected: return "CommonSolutionGapDetected";
    case errc::parse_error: return "ParseError";
    case errc::inconsistent_style: return "InconsistentStyle";
    case errc::terminal_limit_exceeded: return "TerminalLimitExceeded";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::arithmetic_overflow: return "ArithmeticOverflow";
  }
  return "UnknownError";
}

namespace {

using i128 = __int128;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr i128 kMax64 = std::numeric_limits<long long>::max();

}  // namespace

Rat Rat::make(i128 n, i128 d) {
  if (d == 0) throw Error(errc::invalid_argument, "rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (abs128(n) > kMax64 || d > kMax64)
    throw Error(errc::arithmetic_overflow, "rational exceeds 64-bit range");
  Rat r;
  r.num_ = (long long)n;
  r.den_ = (long long)d;
  if (r.den_ == 0) r.den_ = 1;
  return r;
}

Rat::Rat(long long n, long long d) { *this = make(n, d); }

Rat Rat::parse(std::string_view text) {
  auto bad = [&] {
    return Error(errc::parse_error, "bad rational '" + std::string(text) + "'");
  };
  size_t slash = text.find('/');
  long long n = 0, d = 1;
  std::string_view ns = text.substr(0, slash);
  auto rn = std::from_chars(ns.data(), ns.data() + ns.size(), n);
  if (rn.ec != std::errc() || rn.ptr != ns.data() + ns.size()) throw bad();
  if (slash != std::string_view::npos) {
    std::string_view ds = text.substr(slash + 1);
    auto rd = std::from_chars(ds.data(), ds.data() + ds.size(), d);
    if (rd.ec != std::errc() || rd.ptr != ds.data() + ds.size() || d == 0) throw bad();
  }
  return Rat(n, d);
}

long long Rat::floor() const {
  long long q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

long long Rat::ceil() const {
  long long q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

Rat Rat::floor_to_grid(long long grid_den) const {
  Rat scaled = *this * Rat(grid_den);
  return Rat(scaled.floor(), grid_den);
}

Rat Rat::ceil_to_grid(long long grid_den) const {
  Rat scaled = *this * Rat(grid_den);
  return Rat(scaled.ceil(), grid_den);
}

std::string Rat::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::operator-() const {
  Rat r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  *this = make((i128)num_ * o.den_ + (i128)o.num_ * den_, (i128)den_ * o.den_);
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  *this = make((i128)num_ * o.den_ - (i128)o.num_ * den_, (i128)den_ * o.den_);
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  *this = make((i128)num_ * o.num_, (i128)den_ * o.den_);
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.num_ == 0) throw Error(errc::invalid_argument, "division by zero rational");
  *this = make((i128)num_ * o.den_, (i128)den_ * o.num_);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

long long checked_lcm(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  i128 g = gcd128(a, b);
  i128 l = (i128)a / g * b;
  if (abs128(l) > kMax64)
    throw Error(errc::arithmetic_overflow, "lcm exceeds 64-bit range");
  return (long long)l;
}

}  // namespace pathpack
