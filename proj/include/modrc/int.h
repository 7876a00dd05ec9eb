#ifndef MODRC_INT_H_
#define MODRC_INT_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>

#include "modrc/errors.h"

namespace modrc {

/// Overflow-checked signed 64-bit integer.
///
/// Every arithmetic operator traps overflow and throws OverflowError instead
/// of wrapping, so formulas can be written in their natural algebraic form.
/// Division is exact-or-throw: `/` requires the divisor to divide the
/// dividend. Use floor_div / ceil_div / mod for rounding variants.
class Int {
 public:
  constexpr Int() = default;
  constexpr Int(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  [[nodiscard]] constexpr std::int64_t value() const { return v_; }
  explicit constexpr operator std::int64_t() const { return v_; }

  friend Int operator+(Int a, Int b) {
    std::int64_t out;
    if (__builtin_add_overflow(a.v_, b.v_, &out)) throw OverflowError("integer overflow in addition");
    return Int(out);
  }
  friend Int operator-(Int a, Int b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a.v_, b.v_, &out)) throw OverflowError("integer overflow in subtraction");
    return Int(out);
  }
  friend Int operator*(Int a, Int b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a.v_, b.v_, &out)) throw OverflowError("integer overflow in multiplication");
    return Int(out);
  }
  // Exact division; a non-zero remainder is an internal-consistency failure.
  friend Int operator/(Int a, Int b) {
    if (b.v_ == 0) throw InvariantError("division by zero");
    if (b.v_ == -1) return -a;
    if (a.v_ % b.v_ != 0) throw InvariantError("inexact integer division");
    return Int(a.v_ / b.v_);
  }
  Int operator-() const {
    if (v_ == INT64_MIN) throw OverflowError("integer overflow in negation");
    return Int(-v_);
  }

  Int& operator+=(Int o) { return *this = *this + o; }
  Int& operator-=(Int o) { return *this = *this - o; }
  Int& operator*=(Int o) { return *this = *this * o; }
  Int& operator++() { return *this = *this + 1; }
  Int& operator--() { return *this = *this - 1; }

  friend constexpr bool operator==(Int a, Int b) = default;
  friend constexpr std::strong_ordering operator<=>(Int a, Int b) = default;

  friend std::ostream& operator<<(std::ostream& os, Int x) { return os << x.v_; }

 private:
  std::int64_t v_ = 0;
};

/// True iff `divisor` divides `x` (divisor must be non-zero).
inline bool divides(Int divisor, Int x) {
  if (divisor == 0) throw InvariantError("divisibility test by zero");
  return x.value() % divisor.value() == 0;
}

/// Floor of a / b for b > 0.
inline Int floor_div(Int a, Int b) {
  if (b <= 0) throw InvariantError("floor_div requires a positive divisor");
  std::int64_t q = a.value() / b.value();
  if (a.value() % b.value() != 0 && a.value() < 0) --q;
  return Int(q);
}

/// Ceiling of a / b for b > 0.
inline Int ceil_div(Int a, Int b) {
  if (b <= 0) throw InvariantError("ceil_div requires a positive divisor");
  std::int64_t q = a.value() / b.value();
  if (a.value() % b.value() != 0 && a.value() > 0) ++q;
  return Int(q);
}

/// Least non-negative residue of a modulo m > 0.
inline Int mod(Int a, Int m) {
  if (m <= 0) throw InvariantError("mod requires a positive modulus");
  std::int64_t v = a.value() % m.value();
  if (v < 0) v += m.value();
  return Int(v);
}

inline Int abs(Int a) { return a < 0 ? -a : a; }

/// gcd with gcd(x, 0) = |x|; always non-negative.
inline Int gcd(Int a, Int b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Int t = mod(a, b);
    a = b;
    b = t;
  }
  return a;
}

}  // namespace modrc

template <>
struct std::hash<modrc::Int> {
  std::size_t operator()(modrc::Int x) const noexcept { return std::hash<std::int64_t>{}(x.value()); }
};

#endif  // MODRC_INT_H_
