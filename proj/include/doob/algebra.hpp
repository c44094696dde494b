#pragma once

// Exact arithmetic over the two coordinate alphabets: the field GF(4) and
// the ring Z4. GF(4) elements are encoded as 0,1,2,3 with 2 = xi and
// 3 = xi^2 = xi + 1 (polynomial basis over GF(2)), so addition is bitwise
// XOR and the rank order 0 < 1 < xi < xi^2 coincides with the numeric one.
// The two alphabets are deliberately distinct types with no implicit
// conversion between them.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace doob {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
inline constexpr std::uint8_t kF4MulTable[4][4] = {
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
};
}  // namespace detail

class F4 {
 public:
  constexpr F4() = default;
  constexpr explicit F4(unsigned value) : v_(static_cast<std::uint8_t>(value)) {
    if (value > 3) throw std::invalid_argument("F4 value out of range");
  }

  // Numeric rank under the ordering 0 < 1 < xi < xi^2.
  constexpr unsigned rank() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  friend constexpr F4 operator+(F4 a, F4 b) { return from_raw(a.v_ ^ b.v_); }
  friend constexpr F4 operator-(F4 a, F4 b) { return a + b; }
  friend constexpr F4 operator*(F4 a, F4 b) {
    return from_raw(detail::kF4MulTable[a.v_][b.v_]);
  }
  F4& operator+=(F4 o) { v_ ^= o.v_; return *this; }

  constexpr F4 inverse() const {
    if (v_ == 0) throw std::domain_error("F4: zero has no inverse");
    return from_raw(v_ == 1 ? 1 : v_ ^ 1);  // xi <-> xi^2
  }

  friend constexpr bool operator==(F4 a, F4 b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(F4 a, F4 b) { return a.v_ != b.v_; }
  friend constexpr bool operator<(F4 a, F4 b) { return a.v_ < b.v_; }

  char symbol() const { return "01xy"[v_]; }
  static F4 from_symbol(char c) {
    switch (c) {
      case '0': return F4(0);
      case '1': return F4(1);
      case 'x': return F4(2);
      case 'y': return F4(3);
      default: throw ParseError(std::string("bad F4 symbol '") + c + "'");
    }
  }

 private:
  static constexpr F4 from_raw(std::uint8_t v) {
    F4 e;
    e.v_ = v;
    return e;
  }
  std::uint8_t v_ = 0;
};

inline constexpr F4 kXi = F4(2);
inline constexpr F4 kXiSq = F4(3);

class Z4 {
 public:
  constexpr Z4() = default;
  constexpr explicit Z4(unsigned value) : v_(static_cast<std::uint8_t>(value)) {
    if (value > 3) throw std::invalid_argument("Z4 value out of range");
  }

  constexpr unsigned rank() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  friend constexpr Z4 operator+(Z4 a, Z4 b) { return from_raw((a.v_ + b.v_) & 3); }
  friend constexpr Z4 operator-(Z4 a, Z4 b) { return from_raw((a.v_ - b.v_) & 3); }
  friend constexpr Z4 operator*(Z4 a, Z4 b) { return from_raw((a.v_ * b.v_) & 3); }
  constexpr Z4 operator-() const { return from_raw((-v_) & 3); }

  friend constexpr bool operator==(Z4 a, Z4 b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Z4 a, Z4 b) { return a.v_ != b.v_; }
  friend constexpr bool operator<(Z4 a, Z4 b) { return a.v_ < b.v_; }

  char symbol() const { return static_cast<char>('0' + v_); }
  static Z4 from_symbol(char c) {
    if (c < '0' || c > '3') throw ParseError(std::string("bad Z4 digit '") + c + "'");
    return Z4(static_cast<unsigned>(c - '0'));
  }

 private:
  static constexpr Z4 from_raw(std::uint8_t v) {
    Z4 e;
    e.v_ = v;
    return e;
  }
  std::uint8_t v_ = 0;
};

using F4Vector = std::vector<F4>;
using Z4Vector = std::vector<Z4>;

inline F4 dot(const F4Vector& a, const F4Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("F4 dot: length mismatch");
  F4 acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

inline Z4 dot(const Z4Vector& a, const Z4Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Z4 dot: length mismatch");
  Z4 acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc = acc + a[i] * b[i];
  return acc;
}

inline std::string to_string(const F4Vector& v) {
  std::string s;
  s.reserve(v.size());
  for (F4 e : v) s.push_back(e.symbol());
  return s;
}

inline std::string to_string(const Z4Vector& v) {
  std::string s;
  s.reserve(v.size());
  for (Z4 e : v) s.push_back(e.symbol());
  return s;
}

}  // namespace doob
