#pragma once

// The quaternary Hamming code of length (4^k - 1)/3. Its check matrix
// consists of all nonzero height-k columns over F4 whose first nonzero
// entry is 1, sorted in decreasing lexicographic order (row 1 most
// significant, 0 < 1 < xi < xi^2). Under that ordering the columns fall
// into (length-1)/4 quadruples on positions 4j+1..4j+4 whose last row is
// (xi^2, xi, 1, 0) while every other row is constant on the quadruple,
// plus the lone final column (0,...,0,1).
//
// Columns are stored packed, two bits per row with row 1 in the most
// significant pair, so packed numeric order is exactly the column order
// and a syndrome accumulates with XORs. Syndrome decoding normalizes a
// nonzero syndrome by its first nonzero entry alpha; the normalized
// column names the error position and alpha is the error value.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "doob/algebra.hpp"
#include "doob/component_codes.hpp"

namespace doob {

class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Multiply every 2-bit F4 field of a packed word by xi.
constexpr std::uint32_t xi_times_packed(std::uint32_t p) {
  std::uint32_t hi = (p >> 1) & 0x55555555u;
  std::uint32_t lo = p & 0x55555555u;
  return ((hi ^ lo) << 1) | hi;
}

constexpr std::uint32_t f4_scale_packed(unsigned scalar, std::uint32_t p) {
  switch (scalar & 3) {
    case 0: return 0;
    case 1: return p;
    case 2: return xi_times_packed(p);
    default: return xi_times_packed(xi_times_packed(p));
  }
}

}  // namespace detail

inline std::uint64_t hamming_length(int k) {
  return ((std::uint64_t{1} << (2 * k)) - 1) / 3;
}

class CheckMatrix {
 public:
  static CheckMatrix build(int k) {
    if (k < 1 || k > 15) throw std::invalid_argument("CheckMatrix: k must be in 1..15");
    CheckMatrix m;
    m.k_ = k;
    const std::uint32_t total = std::uint32_t{1} << (2 * k);
    for (std::uint32_t v = 1; v < total; ++v) {
      // first nonzero row (row 0 sits in the most significant bit pair)
      unsigned first = 0;
      for (int r = 0; r < k; ++r) {
        first = (v >> (2 * (k - 1 - r))) & 3;
        if (first != 0) break;
      }
      if (first == 1) m.cols_.push_back(v);
    }
    std::sort(m.cols_.begin(), m.cols_.end(), std::greater<std::uint32_t>());
    if (m.cols_.size() != hamming_length(k)) throw std::logic_error("CheckMatrix: wrong column count");
    return m;
  }

  int rows() const { return k_; }
  int length() const { return static_cast<int>(cols_.size()); }

  F4 entry(int row, int col) const {
    return F4((cols_[static_cast<std::size_t>(col)] >> (2 * (k_ - 1 - row))) & 3);
  }

  std::uint32_t packed_column(int col) const { return cols_[static_cast<std::size_t>(col)]; }

  // One row per line, entries space-separated, symbols 0 1 x y.
  std::string export_text() const {
    std::string out;
    for (int r = 0; r < k_; ++r) {
      for (int c = 0; c < length(); ++c) {
        if (c) out.push_back(' ');
        out.push_back(entry(r, c).symbol());
      }
      out.push_back('\n');
    }
    return out;
  }

 private:
  int k_ = 0;
  std::vector<std::uint32_t> cols_;
};

inline CheckMatrix build_check_matrix(int k) { return CheckMatrix::build(k); }

class HammingCode {
 public:
  explicit HammingCode(int k) : matrix_(CheckMatrix::build(k)) {
    const int n = matrix_.length();
    scaled_.resize(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
      std::uint32_t col = matrix_.packed_column(c);
      for (unsigned s = 0; s < 4; ++s) scaled_[c][s] = detail::f4_scale_packed(s, col);
      column_position_.emplace(col, c);
    }
    build_encoder();
  }

  int k() const { return matrix_.rows(); }
  int length() const { return matrix_.length(); }
  const CheckMatrix& matrix() const { return matrix_; }

  std::uint32_t syndrome_packed(const F4Vector& word) const {
    if (static_cast<int>(word.size()) != length())
      throw std::invalid_argument("syndrome: word length does not match the code length");
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < word.size(); ++i) s ^= scaled_[i][word[i].rank()];
    return s;
  }

  F4Vector syndrome(const F4Vector& word) const {
    std::uint32_t s = syndrome_packed(word);
    F4Vector out(static_cast<std::size_t>(k()));
    for (int r = 0; r < k(); ++r) out[r] = F4((s >> (2 * (k() - 1 - r))) & 3);
    return out;
  }

  bool is_codeword(const F4Vector& word) const { return syndrome_packed(word) == 0; }

  struct Decoded {
    F4Vector word;
    int error_position = -1;  // -1 when the input already was a codeword
    F4 error_value;
  };

  // The unique codeword at Hamming distance <= 1; total by 1-perfectness.
  Decoded decode_with_position(const F4Vector& word) const {
    std::uint32_t s = syndrome_packed(word);
    Decoded d{word, -1, F4(0)};
    if (s == 0) return d;
    unsigned alpha = 0;
    for (int r = 0; r < k(); ++r) {
      alpha = (s >> (2 * (k() - 1 - r))) & 3;
      if (alpha != 0) break;
    }
    std::uint32_t normalized = detail::f4_scale_packed(F4(alpha).inverse().rank(), s);
    auto it = column_position_.find(normalized);
    if (it == column_position_.end()) throw std::logic_error("decode: normalized syndrome is not a column");
    d.error_position = it->second;
    d.error_value = F4(alpha);
    d.word[static_cast<std::size_t>(it->second)] += F4(alpha);
    return d;
  }

  F4Vector decode(const F4Vector& word) const { return decode_with_position(word).word; }

  // Adds a word of the H(4,4) component code E'' onto the quadruple of
  // positions 4j+1..4j+4 (1-based); codewords stay codewords.
  F4Vector translate_quadruple(const F4Vector& codeword, int j, const std::array<F4, 4>& e) const {
    if (static_cast<int>(codeword.size()) != length())
      throw std::invalid_argument("translate_quadruple: word length mismatch");
    if (j < 0 || j >= (length() - 1) / 4) throw std::invalid_argument("translate_quadruple: quadruple index out of range");
    int ew = make_word(e[0].rank(), e[1].rank(), e[2].rank(), e[3].rank());
    if (!component_code(ComponentCodeId::ESmall).contains(ew))
      throw std::invalid_argument("translate_quadruple: translation word is not in the component code");
    F4Vector out = codeword;
    for (int i = 0; i < 4; ++i) out[static_cast<std::size_t>(4 * j + i)] += e[static_cast<std::size_t>(i)];
    return out;
  }

  std::uint64_t codeword_count_log4() const { return static_cast<std::uint64_t>(length() - k()); }

  // All codewords, as free-position assignments through the systematic
  // encoder. Guarded by the cap since the count is 4^(length-k).
  std::vector<F4Vector> enumerate_codewords(std::uint64_t cap) const {
    int free_count = length() - k();
    if (free_count > 30 || (std::uint64_t{1} << (2 * free_count)) > cap)
      throw CapExceededError("enumerate_codewords: 4^" + std::to_string(free_count) + " codewords exceed the cap");
    std::uint64_t total = std::uint64_t{1} << (2 * free_count);
    std::vector<F4Vector> out;
    out.reserve(static_cast<std::size_t>(total));
    std::vector<F4> info(static_cast<std::size_t>(free_count));
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t rest = idx;
      for (int i = free_count - 1; i >= 0; --i) {
        info[static_cast<std::size_t>(i)] = F4(rest & 3);
        rest >>= 2;
      }
      out.push_back(encode_information(info));
    }
    return out;
  }

  // Deterministic given the generator state; each free symbol consumes one
  // 64-bit draw.
  template <class Rng>
  F4Vector random_codeword(Rng&& rng) const {
    std::vector<F4> info(static_cast<std::size_t>(length() - k()));
    for (auto& s : info) s = F4(static_cast<unsigned>(rng() & 3));
    return encode_information(info);
  }

  F4Vector encode_information(const std::vector<F4>& info) const {
    if (static_cast<int>(info.size()) != length() - k())
      throw std::invalid_argument("encode_information: expected length-k information symbols");
    F4Vector word(static_cast<std::size_t>(length()));
    for (std::size_t i = 0; i < info.size(); ++i) word[static_cast<std::size_t>(free_positions_[i])] = info[i];
    for (int r = 0; r < k(); ++r) {
      F4 acc;
      for (std::size_t i = 0; i < info.size(); ++i) acc += combination_[static_cast<std::size_t>(r)][i] * info[i];
      word[static_cast<std::size_t>(pivot_positions_[static_cast<std::size_t>(r)])] = acc;
    }
    return word;
  }

 private:
  // Reduced row echelon form of the check matrix yields pivot positions
  // and, per pivot row, the coefficients of the free positions. In
  // characteristic 2 a pivot value is then the plain sum over free
  // positions.
  void build_encoder() {
    const int n = length(), rows = k();
    std::vector<std::vector<unsigned>> a(static_cast<std::size_t>(rows), std::vector<unsigned>(static_cast<std::size_t>(n)));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < n; ++c) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = matrix_.entry(r, c).rank();

    int row = 0;
    for (int col = 0; col < n && row < rows; ++col) {
      int pivot = -1;
      for (int r = row; r < rows; ++r)
        if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(row)]);
      unsigned inv = F4(a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]).inverse().rank();
      for (int c = col; c < n; ++c)
        a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] =
            (F4(inv) * F4(a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)])).rank();
      for (int r = 0; r < rows; ++r) {
        if (r == row) continue;
        unsigned f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
        if (f == 0) continue;
        for (int c = col; c < n; ++c) {
          F4 sub = F4(f) * F4(a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)]);
          a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
              (F4(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) + sub).rank();
        }
      }
      pivot_positions_.push_back(col);
      ++row;
    }
    if (row != rows) throw std::logic_error("HammingCode: check matrix does not have full rank");

    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int p : pivot_positions_) is_pivot[static_cast<std::size_t>(p)] = true;
    for (int c = 0; c < n; ++c)
      if (!is_pivot[static_cast<std::size_t>(c)]) free_positions_.push_back(c);

    combination_.assign(static_cast<std::size_t>(rows), std::vector<F4>(free_positions_.size()));
    for (int r = 0; r < rows; ++r)
      for (std::size_t i = 0; i < free_positions_.size(); ++i)
        combination_[static_cast<std::size_t>(r)][i] =
            F4(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(free_positions_[i])]);
  }

  CheckMatrix matrix_;
  std::vector<std::array<std::uint32_t, 4>> scaled_;
  std::unordered_map<std::uint32_t, int> column_position_;
  std::vector<int> pivot_positions_, free_positions_;
  std::vector<std::vector<F4>> combination_;
};

}  // namespace doob
