#pragma once

// The family of 1-perfect codes in D(m,n) built by substitution from the
// quaternary Hamming code of length 2m+n. Parameters are admissible when
// 2m+n = (4^k - 1)/3 for some k, equivalently when the ball size 6m+3n+1
// is a power of 2.
//
// A codeword arises from a Hamming codeword x by pushing its leading
// quadruples through the coset-preserving bijections: with m even,
// quadruples 4i-3..4i for i = 1..m/2 go through phi and the tail passes
// through unchanged; with m odd the last substituted quadruple (positions
// 2m-1..2m+2) goes through psi instead and the tail starts at 2m+3. The
// substituted quadruples always sit inside the quadruple-structured
// prefix of the check matrix, which translation invariance of the code
// over E'' (translate_quadruple) depends on; this is asserted at
// construction.
//
// Decoding pulls the received vertex back through the inverse maps,
// decodes in the Hamming code, and corrects either a pass-through
// coordinate directly or, when the correction lands inside a substituted
// quadruple, splices in the unique member of the matching small-code
// coset at ambient distance 1.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "doob/algebra.hpp"
#include "doob/component_codes.hpp"
#include "doob/hamming.hpp"
#include "doob/metrics.hpp"

namespace doob {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

struct AdmissibilityResult {
  bool admissible = false;
  int m = 0, n = 0;
  int k = 0;                  // witness with 2m+n = (4^k - 1)/3, when admissible
  std::uint64_t ball_size = 0;  // 6m+3n+1, reported either way
};

inline AdmissibilityResult check_admissibility(int m, int n) {
  if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("check_admissibility: need m,n >= 0 and m+n >= 1");
  AdmissibilityResult res;
  res.m = m;
  res.n = n;
  res.ball_size = 6ull * static_cast<std::uint64_t>(m) + 3ull * static_cast<std::uint64_t>(n) + 1;
  const std::uint64_t target = 2ull * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(n);
  for (int k = 1; hamming_length(k) <= target; ++k) {
    if (hamming_length(k) == target) {
      res.admissible = true;
      res.k = k;
      break;
    }
  }
  return res;
}

struct DecodeStats {
  bool corrected = false;
  bool in_quadruple = false;
  int forward_lookups = 0;    // substitution-map applications after Hamming decoding
  int coset_candidates = 0;   // small-coset members scanned during the correction
};

class PerfectCode {
 public:
  PerfectCode(int m, int n)
      : PerfectCode(m, n, substitution_map(MapFlavor::Phi), substitution_map(MapFlavor::Psi)) {}

  // Injects custom substitution maps; meant for validation experiments
  // (e.g. checking that a corrupted map breaks perfection). Only
  // bijectivity is required of the maps.
  static PerfectCode with_maps(int m, int n, const SubstitutionMap& phi, const SubstitutionMap& psi) {
    return PerfectCode(m, n, phi, psi);
  }

  const AdmissibilityResult& params() const { return params_; }
  const Shape& shape() const { return shape_; }
  const HammingCode& hamming() const { return hamming_; }
  const SubstitutionMap& phi() const { return phi_; }
  const SubstitutionMap& psi() const { return psi_; }
  int quadruple_count() const { return quad_count_; }

  // The defining bijection from F4 words of the Hamming length onto the
  // vertex set; images of Hamming codewords are exactly the code.
  Vertex encode_vertex(const F4Vector& x) const {
    if (static_cast<int>(x.size()) != hamming_.length())
      throw std::invalid_argument("encode_vertex: word length does not match 2m+n");
    Z4Vector z(static_cast<std::size_t>(shape_.z4_length()));
    for (int q = 0; q < quad_count_; ++q) {
      int src = make_word(x[4 * q].rank(), x[4 * q + 1].rank(), x[4 * q + 2].rank(), x[4 * q + 3].rank());
      int dst = map_for(q).apply(src);
      for (int i = 0; i < 4; ++i) z[static_cast<std::size_t>(4 * q + i)] = Z4(word_digit(dst, i));
    }
    F4Vector f(x.begin() + 4 * quad_count_, x.end());
    return Vertex(shape_, std::move(z), std::move(f));
  }

  F4Vector preimage(const Vertex& y) const {
    require_shape(y, "preimage");
    F4Vector x(static_cast<std::size_t>(hamming_.length()));
    for (int q = 0; q < quad_count_; ++q) {
      int dst = quad_word(y, q);
      int src = map_for(q).apply_inverse(dst);
      for (int i = 0; i < 4; ++i) x[static_cast<std::size_t>(4 * q + i)] = F4(word_digit(src, i));
    }
    for (int t = 0; t < tail_length_; ++t) x[static_cast<std::size_t>(4 * quad_count_ + t)] = y.f4_part()[static_cast<std::size_t>(t)];
    return x;
  }

  bool is_member(const Vertex& y) const { return hamming_.is_codeword(preimage(y)); }

  Vertex decode(const Vertex& y) const {
    DecodeStats stats;
    return decode(y, stats);
  }

  // The unique codeword at Doob distance <= 1.
  Vertex decode(const Vertex& y, DecodeStats& stats) const {
    require_shape(y, "decode");
    stats = DecodeStats{};
    HammingCode::Decoded d = hamming_.decode_with_position(preimage(y));
    if (d.error_position < 0) return y;
    stats.corrected = true;
    Vertex out = y;
    int p = d.error_position;
    if (p >= 4 * quad_count_) {
      out.f4_part()[static_cast<std::size_t>(p - 4 * quad_count_)] = d.word[static_cast<std::size_t>(p)];
      return out;
    }
    stats.in_quadruple = true;
    int q = p / 4;
    const SubstitutionMap& map = map_for(q);
    int corrected_src = make_word(d.word[4 * q].rank(), d.word[4 * q + 1].rank(),
                                  d.word[4 * q + 2].rank(), d.word[4 * q + 3].rank());
    int z = map.apply(corrected_src);
    ++stats.forward_lookups;
    const CosetPair& pair = coset_pair(map.target_pair());
    Ambient ambient = map.target_ambient();
    int received = quad_word(y, q);
    int found = -1;
    for (int candidate : pair.small_coset_of(z)) {
      ++stats.coset_candidates;
      if (ambient_distance(ambient, candidate, received) <= 1) {
        if (found >= 0) throw std::logic_error("decode: small-code coset holds two words next to the received quadruple");
        found = candidate;
      }
    }
    if (found < 0) throw std::logic_error("decode: small-code coset holds no word next to the received quadruple");
    for (int i = 0; i < 4; ++i) out.z4_part()[static_cast<std::size_t>(4 * q + i)] = Z4(word_digit(found, i));
    return out;
  }

  // Number of codewords in the radius-1 ball around v. Uses per-quadruple
  // syndrome tables so each neighbor costs O(1) after the O(2m+n) setup.
  int ball_coverage(const Vertex& v) const {
    require_shape(v, "ball_coverage");
    std::uint32_t s0 = 0;
    std::vector<int> quads(static_cast<std::size_t>(quad_count_));
    for (int q = 0; q < quad_count_; ++q) {
      quads[static_cast<std::size_t>(q)] = quad_word(v, q);
      s0 ^= quad_syndrome_[static_cast<std::size_t>(q)][static_cast<std::size_t>(quads[static_cast<std::size_t>(q)])];
    }
    for (int t = 0; t < tail_length_; ++t) s0 ^= tail_syndrome(t, v.f4_part()[static_cast<std::size_t>(t)].rank());
    int count = (s0 == 0) ? 1 : 0;
    for (int q = 0; q < quad_count_; ++q) {
      Ambient ambient = map_for(q).target_ambient();
      const auto& table = quad_syndrome_[static_cast<std::size_t>(q)];
      std::uint32_t base = s0 ^ table[static_cast<std::size_t>(quads[static_cast<std::size_t>(q)])];
      for (int delta : ambient_neighbor_deltas(ambient)) {
        int moved = ambient_add(ambient, quads[static_cast<std::size_t>(q)], delta);
        if ((base ^ table[static_cast<std::size_t>(moved)]) == 0) ++count;
      }
    }
    for (int t = 0; t < tail_length_; ++t) {
      unsigned digit = v.f4_part()[static_cast<std::size_t>(t)].rank();
      std::uint32_t base = s0 ^ tail_syndrome(t, digit);
      for (unsigned c = 0; c < 4; ++c) {
        if (c == digit) continue;
        if ((base ^ tail_syndrome(t, c)) == 0) ++count;
      }
    }
    return count;
  }

  // All codewords, when 4^(2m+n-k) stays within the cap.
  std::vector<Vertex> enumerate(std::uint64_t cap = kDefaultEnumerationCap) const {
    std::vector<Vertex> out;
    for (const F4Vector& c : hamming_.enumerate_codewords(cap)) out.push_back(encode_vertex(c));
    return out;
  }

 private:
  PerfectCode(int m, int n, const SubstitutionMap& phi, const SubstitutionMap& psi)
      : params_(check_admissibility(m, n)),
        shape_(admissible_shape(params_)),
        hamming_(params_.k),
        phi_(phi),
        psi_(psi) {
    quad_count_ = shape_.z4_length() / 4;
    tail_length_ = shape_.f4_length();
    // substituted quadruples must lie inside the structured prefix
    if (4 * quad_count_ > hamming_.length() - 1)
      throw std::logic_error("PerfectCode: substituted quadruples leave the structured matrix prefix");
    build_syndrome_tables();
  }

  static Shape admissible_shape(const AdmissibilityResult& params) {
    if (!params.admissible)
      throw std::invalid_argument("PerfectCode: (m,n) is inadmissible, ball size " + std::to_string(params.ball_size) +
                                  " is not a power of 2");
    return Shape(params.m, params.n);
  }

  const SubstitutionMap& map_for(int q) const {
    return (shape_.odd_m() && q == quad_count_ - 1) ? psi_ : phi_;
  }

  static int quad_word(const Vertex& y, int q) {
    return make_word(y.z4_part()[4 * q].rank(), y.z4_part()[4 * q + 1].rank(),
                     y.z4_part()[4 * q + 2].rank(), y.z4_part()[4 * q + 3].rank());
  }

  std::uint32_t tail_syndrome(int t, unsigned digit) const {
    return tail_scaled_[static_cast<std::size_t>(t)][digit];
  }

  void build_syndrome_tables() {
    quad_syndrome_.resize(static_cast<std::size_t>(quad_count_));
    for (int q = 0; q < quad_count_; ++q) {
      const SubstitutionMap& map = map_for(q);
      for (int z = 0; z < 256; ++z) {
        int src = map.apply_inverse(z);
        std::uint32_t s = 0;
        for (int i = 0; i < 4; ++i)
          s ^= detail::f4_scale_packed(word_digit(src, i), hamming_.matrix().packed_column(4 * q + i));
        quad_syndrome_[static_cast<std::size_t>(q)][static_cast<std::size_t>(z)] = s;
      }
    }
    tail_scaled_.resize(static_cast<std::size_t>(tail_length_));
    for (int t = 0; t < tail_length_; ++t)
      for (unsigned c = 0; c < 4; ++c)
        tail_scaled_[static_cast<std::size_t>(t)][c] =
            detail::f4_scale_packed(c, hamming_.matrix().packed_column(4 * quad_count_ + t));
  }

  void require_shape(const Vertex& y, const char* where) const {
    if (y.shape() != shape_) throw std::invalid_argument(std::string(where) + ": vertex shape mismatch");
  }

  AdmissibilityResult params_;
  Shape shape_;
  HammingCode hamming_;
  SubstitutionMap phi_, psi_;
  int quad_count_ = 0;
  int tail_length_ = 0;
  std::vector<std::array<std::uint32_t, 256>> quad_syndrome_;
  std::vector<std::array<std::uint32_t, 4>> tail_scaled_;
};

}  // namespace doob
