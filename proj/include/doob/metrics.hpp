#pragma once

// Distance and neighborhood structure of the Doob graph D(m,n): the
// Cartesian product of m Shrikhande graphs and n copies of K4. Coordinate
// layout depends on the parity of m:
//
//   m even:  [2m Z4 digits = m Shrikhande pairs] [n F4 symbols]
//   m odd:   [2m Z4 digits = m Shrikhande pairs] [2 Z4 digits = two
//            K4(Z4) components] [n-2 F4 symbols]   (requires n >= 2)
//
// The Shrikhande graph is the Cayley graph on Z4^2 with connector set
// {(0,1),(0,3),(1,0),(3,0),(1,1),(3,3)}; it has diameter 2, so its
// distance is computed by the closed rule (equal / connector / else 2).
// Vertex text format: "<z4 digits>|<f4 symbols>", e.g. "0123|x" in D(2,1).

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "doob/algebra.hpp"

namespace doob {

inline constexpr std::array<std::pair<unsigned, unsigned>, 6> kShrikhandeConnectors = {{
    {0, 1}, {0, 3}, {1, 0}, {3, 0}, {1, 1}, {3, 3},
}};

inline constexpr bool is_shrikhande_connector(unsigned d0, unsigned d1) {
  for (auto [c0, c1] : kShrikhandeConnectors)
    if (c0 == d0 && c1 == d1) return true;
  return false;
}

inline int shrikhande_distance(Z4 a0, Z4 a1, Z4 b0, Z4 b1) {
  Z4 d0 = b0 - a0, d1 = b1 - a1;
  if (d0.is_zero() && d1.is_zero()) return 0;
  return is_shrikhande_connector(d0.rank(), d1.rank()) ? 1 : 2;
}

inline int k4_distance(Z4 a, Z4 b) { return a == b ? 0 : 1; }
inline int k4_distance(F4 a, F4 b) { return a == b ? 0 : 1; }

class Shape {
 public:
  Shape(int m, int n) : m_(m), n_(n) {
    if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("Shape: need m,n >= 0 and m+n >= 1");
    if (m % 2 == 1 && n < 2)
      throw std::invalid_argument("Shape: odd m requires n >= 2 (two K4(Z4) components)");
  }

  int m() const { return m_; }
  int n() const { return n_; }
  bool odd_m() const { return m_ % 2 == 1; }
  int z4_length() const { return 2 * m_ + (odd_m() ? 2 : 0); }
  int f4_length() const { return odd_m() ? n_ - 2 : n_; }
  int total_length() const { return 2 * m_ + n_; }
  int degree() const { return 6 * m_ + 3 * n_; }

  friend bool operator==(const Shape& a, const Shape& b) { return a.m_ == b.m_ && a.n_ == b.n_; }
  friend bool operator!=(const Shape& a, const Shape& b) { return !(a == b); }

 private:
  int m_, n_;
};

class Vertex {
 public:
  Vertex(Shape shape, Z4Vector z4_part, F4Vector f4_part)
      : shape_(shape), z4_(std::move(z4_part)), f4_(std::move(f4_part)) {
    if (static_cast<int>(z4_.size()) != shape_.z4_length() ||
        static_cast<int>(f4_.size()) != shape_.f4_length())
      throw std::invalid_argument("Vertex: part lengths do not match the shape layout");
  }

  static Vertex zero(Shape shape) {
    return Vertex(shape, Z4Vector(shape.z4_length()), F4Vector(shape.f4_length()));
  }

  const Shape& shape() const { return shape_; }
  const Z4Vector& z4_part() const { return z4_; }
  const F4Vector& f4_part() const { return f4_; }
  Z4Vector& z4_part() { return z4_; }
  F4Vector& f4_part() { return f4_; }

  friend bool operator==(const Vertex& a, const Vertex& b) {
    return a.shape_ == b.shape_ && a.z4_ == b.z4_ && a.f4_ == b.f4_;
  }
  friend bool operator!=(const Vertex& a, const Vertex& b) { return !(a == b); }
  friend bool operator<(const Vertex& a, const Vertex& b) {
    if (a.z4_ != b.z4_) return a.z4_ < b.z4_;
    return a.f4_ < b.f4_;
  }

 private:
  Shape shape_;
  Z4Vector z4_;
  F4Vector f4_;
};

inline int doob_distance(const Vertex& a, const Vertex& b) {
  if (a.shape() != b.shape()) throw std::invalid_argument("doob_distance: shape mismatch");
  const Shape& s = a.shape();
  int d = 0;
  for (int i = 0; i < s.m(); ++i)
    d += shrikhande_distance(a.z4_part()[2 * i], a.z4_part()[2 * i + 1],
                             b.z4_part()[2 * i], b.z4_part()[2 * i + 1]);
  for (int i = 2 * s.m(); i < s.z4_length(); ++i)
    d += k4_distance(a.z4_part()[i], b.z4_part()[i]);
  for (int i = 0; i < s.f4_length(); ++i)
    d += k4_distance(a.f4_part()[i], b.f4_part()[i]);
  return d;
}

// All vertices at distance exactly 1; there are 6m+3n of them.
inline std::vector<Vertex> neighbors(const Vertex& v) {
  const Shape& s = v.shape();
  std::vector<Vertex> out;
  out.reserve(s.degree());
  for (int i = 0; i < s.m(); ++i)
    for (auto [c0, c1] : kShrikhandeConnectors) {
      Vertex u = v;
      u.z4_part()[2 * i] = u.z4_part()[2 * i] + Z4(c0);
      u.z4_part()[2 * i + 1] = u.z4_part()[2 * i + 1] + Z4(c1);
      out.push_back(std::move(u));
    }
  for (int i = 2 * s.m(); i < s.z4_length(); ++i)
    for (unsigned c = 1; c < 4; ++c) {
      Vertex u = v;
      u.z4_part()[i] = u.z4_part()[i] + Z4(c);
      out.push_back(std::move(u));
    }
  for (int i = 0; i < s.f4_length(); ++i)
    for (unsigned c = 1; c < 4; ++c) {
      Vertex u = v;
      u.f4_part()[i] += F4(c);
      out.push_back(std::move(u));
    }
  return out;
}

inline std::vector<Vertex> ball(const Vertex& v, int radius) {
  if (radius != 1) throw std::invalid_argument("ball: only radius 1 is supported");
  std::vector<Vertex> out = neighbors(v);
  out.insert(out.begin(), v);
  return out;
}

inline std::string format_vertex(const Vertex& v) {
  std::string s = to_string(v.z4_part());
  s.push_back('|');
  s += to_string(v.f4_part());
  return s;
}

inline Vertex parse_vertex(Shape shape, std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("vertex text: missing '|' separator");
  std::string_view zpart = text.substr(0, bar);
  std::string_view fpart = text.substr(bar + 1);
  if (static_cast<int>(zpart.size()) != shape.z4_length() ||
      static_cast<int>(fpart.size()) != shape.f4_length())
    throw ParseError("vertex text: part lengths do not match the shape layout");
  Z4Vector z;
  z.reserve(zpart.size());
  for (char c : zpart) z.push_back(Z4::from_symbol(c));
  F4Vector f;
  f.reserve(fpart.size());
  for (char c : fpart) f.push_back(F4::from_symbol(c));
  return Vertex(shape, std::move(z), std::move(f));
}

// Rank of a vertex in lexicographic coordinate order (Z4 digits first,
// then F4 symbols). Only defined while 4^(2m+n) fits in 64 bits.
inline std::uint64_t vertex_index(const Vertex& v) {
  if (v.shape().total_length() > 31)
    throw std::invalid_argument("vertex_index: shape too large for a 64-bit index");
  std::uint64_t idx = 0;
  for (Z4 d : v.z4_part()) idx = idx * 4 + d.rank();
  for (F4 d : v.f4_part()) idx = idx * 4 + d.rank();
  return idx;
}

inline Vertex vertex_from_index(Shape shape, std::uint64_t idx) {
  if (shape.total_length() > 31)
    throw std::invalid_argument("vertex_from_index: shape too large for a 64-bit index");
  int len = shape.total_length();
  std::vector<unsigned> digits(len);
  for (int i = len - 1; i >= 0; --i) {
    digits[i] = idx & 3;
    idx >>= 2;
  }
  Z4Vector z;
  z.reserve(shape.z4_length());
  for (int i = 0; i < shape.z4_length(); ++i) z.push_back(Z4(digits[i]));
  F4Vector f;
  f.reserve(shape.f4_length());
  for (int i = 0; i < shape.f4_length(); ++i) f.push_back(F4(digits[shape.z4_length() + i]));
  return Vertex(shape, std::move(z), std::move(f));
}

}  // namespace doob
