#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "pathpack/error.hpp"

namespace pathpack {

// Exact rational with 64-bit numerator/denominator, always reduced, den > 0.
// Intermediates run through __int128; anything that would not fit back into
// 64 bits after reduction throws instead of wrapping. All toolkit arithmetic
// is exact or it is an error.
class Rat {
 public:
  constexpr Rat() = default;
  Rat(long long n) : num_(n) {}
  Rat(long long n, long long d);

  static Rat parse(std::string_view text);  // "n" or "n/d"

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  // Largest integer k with k <= *this, and smallest with k >= *this.
  long long floor() const;
  long long ceil() const;

  // Largest multiple of 1/grid_den not exceeding *this (and the mirror).
  Rat floor_to_grid(long long grid_den) const;
  Rat ceil_to_grid(long long grid_den) const;

  std::string str() const;  // always "n/d", lowest terms

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  static Rat make(__int128 n, __int128 d);

  long long num_ = 0;
  long long den_ = 1;
};

inline Rat rat(long long n, long long d = 1) { return Rat(n, d); }

// lcm on long long with overflow check; used for multiflow fractionality.
long long checked_lcm(long long a, long long b);

}  // namespace pathpack
