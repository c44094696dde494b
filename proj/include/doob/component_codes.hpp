#pragma once

// The six length-4 additive codes used by the substitution construction,
// their two-level coset decompositions, and the substitution bijections
// between H(4,4) and D(2,0) / D(1,2).
//
// Length-4 words over a 4-letter alphabet are handled as indices 0..255
// (base 4, coordinate 1 most significant), so index order equals the
// lexicographic order under the rank 0 < 1 < 2 < 3 resp. 0 < 1 < xi < xi^2.
//
// Three ambient metrics occur:
//   D12: Shrikhande pair on coordinates 1-2, K4(Z4) on 3 and on 4
//   D20: Shrikhande pairs on coordinates 1-2 and 3-4
//   H44: Hamming distance over F4^4
//
// Coset labels are canonical: a coset's representative is its
// lexicographic minimum; outer labels order the four big-code cosets by
// representative, inner labels order the four small-code cosets inside
// each big coset, and the element index is the lexicographic rank inside
// the small-code coset. The substitution maps transport labels: forward(w)
// is the word of the target group with the same (outer, inner, element).

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "doob/algebra.hpp"
#include "doob/metrics.hpp"

namespace doob {

enum class Ambient { D12, D20, H44 };

constexpr bool ambient_is_f4(Ambient a) { return a == Ambient::H44; }

constexpr unsigned word_digit(int w, int coord) { return (static_cast<unsigned>(w) >> (2 * (3 - coord))) & 3; }

constexpr int make_word(unsigned d0, unsigned d1, unsigned d2, unsigned d3) {
  return static_cast<int>((d0 << 6) | (d1 << 4) | (d2 << 2) | d3);
}

inline int ambient_add(Ambient a, int u, int v) {
  if (ambient_is_f4(a)) return u ^ v;
  int w = 0;
  for (int c = 0; c < 4; ++c) w |= ((word_digit(u, c) + word_digit(v, c)) & 3) << (2 * (3 - c));
  return w;
}

inline int ambient_sub(Ambient a, int u, int v) {
  if (ambient_is_f4(a)) return u ^ v;
  int w = 0;
  for (int c = 0; c < 4; ++c) w |= ((word_digit(u, c) - word_digit(v, c)) & 3) << (2 * (3 - c));
  return w;
}

// Scalar multiple of a word: by an integer residue (Z4 ambients) or a
// field element (H44).
inline int ambient_scale(Ambient a, unsigned s, int w) {
  int out = 0;
  for (int c = 0; c < 4; ++c) {
    unsigned d = word_digit(w, c);
    unsigned sd = ambient_is_f4(a) ? (F4(s) * F4(d)).rank() : (s * d) & 3;
    out |= sd << (2 * (3 - c));
  }
  return out;
}

inline int ambient_distance(Ambient a, int u, int v) {
  int diff = ambient_sub(a, u, v);
  unsigned d0 = word_digit(diff, 0), d1 = word_digit(diff, 1);
  unsigned d2 = word_digit(diff, 2), d3 = word_digit(diff, 3);
  auto sh = [](unsigned x0, unsigned x1) {
    if (x0 == 0 && x1 == 0) return 0;
    return is_shrikhande_connector(x0, x1) ? 1 : 2;
  };
  switch (a) {
    case Ambient::D12: return sh(d0, d1) + (d2 != 0) + (d3 != 0);
    case Ambient::D20: return sh(d0, d1) + sh(d2, d3);
    case Ambient::H44: return (d0 != 0) + (d1 != 0) + (d2 != 0) + (d3 != 0);
  }
  return 0;
}

// The twelve difference words giving the neighbors of any word; each of
// the three ambient graphs is 12-regular.
inline const std::array<int, 12>& ambient_neighbor_deltas(Ambient a) {
  static const std::array<int, 12> d12 = [] {
    std::array<int, 12> d{};
    int i = 0;
    for (auto [c0, c1] : kShrikhandeConnectors) d[i++] = make_word(c0, c1, 0, 0);
    for (unsigned c = 1; c < 4; ++c) d[i++] = make_word(0, 0, c, 0);
    for (unsigned c = 1; c < 4; ++c) d[i++] = make_word(0, 0, 0, c);
    return d;
  }();
  static const std::array<int, 12> d20 = [] {
    std::array<int, 12> d{};
    int i = 0;
    for (auto [c0, c1] : kShrikhandeConnectors) d[i++] = make_word(c0, c1, 0, 0);
    for (auto [c0, c1] : kShrikhandeConnectors) d[i++] = make_word(0, 0, c0, c1);
    return d;
  }();
  static const std::array<int, 12> h44 = [] {
    std::array<int, 12> d{};
    int i = 0;
    for (int c = 0; c < 4; ++c)
      for (unsigned v = 1; v < 4; ++v) d[i++] = static_cast<int>(v) << (2 * (3 - c));
    return d;
  }();
  switch (a) {
    case Ambient::D12: return d12;
    case Ambient::D20: return d20;
    case Ambient::H44: return h44;
  }
  return h44;
}

struct ComponentCode {
  Ambient ambient;
  std::vector<int> elements;        // sorted word indices
  std::array<bool, 256> member{};

  bool contains(int w) const { return member[static_cast<unsigned>(w)]; }
  int size() const { return static_cast<int>(elements.size()); }

  // Additive closure of the generators and their scalar multiples.
  static ComponentCode from_generators(Ambient a, const std::vector<int>& generators) {
    ComponentCode code;
    code.ambient = a;
    std::array<bool, 256> in{};
    in[0] = true;
    std::vector<int> work{0};
    for (int g : generators)
      for (unsigned s = 1; s < 4; ++s) {
        int w = ambient_scale(a, s, g);
        if (!in[w]) {
          in[w] = true;
          work.push_back(w);
        }
      }
    for (std::size_t i = 0; i < work.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        int w = ambient_add(a, work[i], work[j]);
        if (!in[w]) {
          in[w] = true;
          work.push_back(w);
        }
      }
    code.member = in;
    for (int w = 0; w < 256; ++w)
      if (in[w]) code.elements.push_back(w);
    return code;
  }
};

// Minimum ambient distance over distinct pairs. The minimum nonzero
// weight is computed as well and the two must agree (the codes are
// additive), otherwise the build is broken.
inline int min_distance(const ComponentCode& code) {
  int pairwise = 100, weight = 100;
  for (std::size_t i = 0; i < code.elements.size(); ++i) {
    for (std::size_t j = i + 1; j < code.elements.size(); ++j) {
      int d = ambient_distance(code.ambient, code.elements[i], code.elements[j]);
      if (d < pairwise) pairwise = d;
    }
    if (code.elements[i] != 0) {
      int d = ambient_distance(code.ambient, code.elements[i], 0);
      if (d < weight) weight = d;
    }
  }
  if (pairwise != weight) throw std::logic_error("min_distance: pairwise minimum differs from minimum weight");
  return pairwise;
}

enum class ComponentCodeId { CSmall, CBig, DSmall, DBig, ESmall, EBig };

namespace detail {
struct ComponentSpec {
  Ambient ambient;
  std::vector<int> generators;
  int size;
  int distance;
};

inline ComponentSpec component_spec(ComponentCodeId id) {
  const int x = make_word(0, 1, 2, 3);   // Z4
  const int y = make_word(1, 0, 1, 2);   // Z4
  const int z = make_word(0, 0, 1, 1);   // Z4
  const int u = make_word(0, 0, 0, 2);   // Z4
  const int v = make_word(0, 0, 2, 0);   // Z4
  const int xp = make_word(1, 1, 1, 1);  // F4
  const int yp = make_word(0, 1, 2, 3);  // F4: (0, 1, xi, xi^2)
  const int zp = make_word(0, 0, 1, 1);  // F4
  switch (id) {
    case ComponentCodeId::CSmall: return {Ambient::D12, {x, y}, 16, 3};
    case ComponentCodeId::CBig: return {Ambient::D12, {x, y, z}, 64, 2};
    case ComponentCodeId::DSmall: return {Ambient::D20, {x, y}, 16, 3};
    case ComponentCodeId::DBig: return {Ambient::D20, {x, y, u, v}, 64, 2};
    case ComponentCodeId::ESmall: return {Ambient::H44, {xp, yp}, 16, 3};
    case ComponentCodeId::EBig: return {Ambient::H44, {xp, yp, zp}, 64, 2};
  }
  throw std::logic_error("component_spec: bad id");
}
}  // namespace detail

inline ComponentCode build_component_code(ComponentCodeId id) {
  auto spec = detail::component_spec(id);
  ComponentCode code = ComponentCode::from_generators(spec.ambient, spec.generators);
  if (code.size() != spec.size) throw std::logic_error("build_component_code: wrong cardinality");
  if (min_distance(code) != spec.distance) throw std::logic_error("build_component_code: wrong minimum distance");
  return code;
}

inline const ComponentCode& component_code(ComponentCodeId id) {
  static const ComponentCode c2 = build_component_code(ComponentCodeId::CSmall);
  static const ComponentCode c1 = build_component_code(ComponentCodeId::CBig);
  static const ComponentCode d2 = build_component_code(ComponentCodeId::DSmall);
  static const ComponentCode d1 = build_component_code(ComponentCodeId::DBig);
  static const ComponentCode e2 = build_component_code(ComponentCodeId::ESmall);
  static const ComponentCode e1 = build_component_code(ComponentCodeId::EBig);
  switch (id) {
    case ComponentCodeId::CSmall: return c2;
    case ComponentCodeId::CBig: return c1;
    case ComponentCodeId::DSmall: return d2;
    case ComponentCodeId::DBig: return d1;
    case ComponentCodeId::ESmall: return e2;
    case ComponentCodeId::EBig: return e1;
  }
  throw std::logic_error("component_code: bad id");
}

struct CosetLabel {
  std::uint8_t outer;    // coset of the big code, 0..3
  std::uint8_t inner;    // coset of the small code within it, 0..3
  std::uint8_t element;  // lexicographic rank within the small coset, 0..15

  friend bool operator==(CosetLabel a, CosetLabel b) {
    return a.outer == b.outer && a.inner == b.inner && a.element == b.element;
  }
};

// Two-level coset decomposition of the 256-word ambient group by a nested
// (small, big) code pair, with canonical labels.
class CosetPair {
 public:
  static CosetPair build(const ComponentCode& small, const ComponentCode& big) {
    if (small.ambient != big.ambient) throw std::invalid_argument("CosetPair: ambient mismatch");
    if (small.size() != 16 || big.size() != 64)
      throw std::invalid_argument("CosetPair: expected sizes 16 and 64");
    for (int w : small.elements)
      if (!big.contains(w)) throw std::invalid_argument("CosetPair: small code is not nested in the big one");

    CosetPair pair;
    pair.ambient_ = small.ambient;
    pair.small_ = small;
    pair.big_ = big;

    std::array<int, 256> big_rep{}, small_rep{};
    for (int w = 0; w < 256; ++w) {
      int rb = 256, rs = 256;
      for (int b : big.elements) rb = std::min(rb, ambient_add(big.ambient, w, b));
      for (int s : small.elements) rs = std::min(rs, ambient_add(small.ambient, w, s));
      big_rep[w] = rb;
      small_rep[w] = rs;
    }

    std::vector<int> outer_reps;
    for (int w = 0; w < 256; ++w)
      if (big_rep[w] == w) outer_reps.push_back(w);
    if (outer_reps.size() != 4) throw std::logic_error("CosetPair: expected 4 big-code cosets");

    for (int o = 0; o < 4; ++o) {
      std::vector<int> inner_reps;
      for (int w = 0; w < 256; ++w)
        if (big_rep[w] == outer_reps[o] && small_rep[w] == w) inner_reps.push_back(w);
      if (inner_reps.size() != 4) throw std::logic_error("CosetPair: expected 4 small-code cosets per big coset");
      for (int i = 0; i < 4; ++i) {
        int count = 0;
        for (int w = 0; w < 256; ++w)
          if (small_rep[w] == inner_reps[i]) {
            pair.outer_[w] = static_cast<std::uint8_t>(o);
            pair.inner_[w] = static_cast<std::uint8_t>(i);
            pair.element_[w] = static_cast<std::uint8_t>(count);
            pair.members_[o][i][count] = w;
            ++count;
          }
        if (count != 16) throw std::logic_error("CosetPair: expected 16 words per small coset");
      }
    }
    return pair;
  }

  Ambient ambient() const { return ambient_; }
  const ComponentCode& small() const { return small_; }
  const ComponentCode& big() const { return big_; }

  CosetLabel label(int w) const {
    unsigned i = static_cast<unsigned>(w);
    return {outer_[i], inner_[i], element_[i]};
  }

  int word_at(CosetLabel l) const { return members_[l.outer][l.inner][l.element]; }

  // The 16 words of the small-code coset holding w, in lexicographic order.
  const std::array<int, 16>& small_coset_of(int w) const {
    unsigned i = static_cast<unsigned>(w);
    return members_[outer_[i]][inner_[i]];
  }

  bool same_small_coset(int a, int b) const { return small_.contains(ambient_sub(ambient_, a, b)); }
  bool same_big_coset(int a, int b) const { return big_.contains(ambient_sub(ambient_, a, b)); }

 private:
  Ambient ambient_ = Ambient::H44;
  ComponentCode small_, big_;
  std::array<std::uint8_t, 256> outer_{}, inner_{}, element_{};
  std::array<std::array<std::array<int, 16>, 4>, 4> members_{};
};

enum class CosetPairId { C, D, E };

inline const CosetPair& coset_pair(CosetPairId id) {
  static const CosetPair c = CosetPair::build(component_code(ComponentCodeId::CSmall),
                                              component_code(ComponentCodeId::CBig));
  static const CosetPair d = CosetPair::build(component_code(ComponentCodeId::DSmall),
                                              component_code(ComponentCodeId::DBig));
  static const CosetPair e = CosetPair::build(component_code(ComponentCodeId::ESmall),
                                              component_code(ComponentCodeId::EBig));
  switch (id) {
    case CosetPairId::C: return c;
    case CosetPairId::D: return d;
    case CosetPairId::E: return e;
  }
  throw std::logic_error("coset_pair: bad id");
}

enum class MapFlavor { Phi, Psi };  // Phi: H(4,4) -> D(2,0), Psi: H(4,4) -> D(1,2)

// A coset-preserving bijection between the 256 vertices of H(4,4) and of
// the target graph, realized as label transport.
struct SubstitutionMap {
  MapFlavor flavor;
  std::array<std::uint8_t, 256> forward{}, inverse{};

  int apply(int src) const { return forward[static_cast<unsigned>(src)]; }
  int apply_inverse(int dst) const { return inverse[static_cast<unsigned>(dst)]; }

  Ambient target_ambient() const { return flavor == MapFlavor::Phi ? Ambient::D20 : Ambient::D12; }
  CosetPairId target_pair() const { return flavor == MapFlavor::Phi ? CosetPairId::D : CosetPairId::C; }

  static SubstitutionMap build(MapFlavor flavor) {
    const CosetPair& src = coset_pair(CosetPairId::E);
    const CosetPair& dst = coset_pair(flavor == MapFlavor::Phi ? CosetPairId::D : CosetPairId::C);
    SubstitutionMap map;
    map.flavor = flavor;
    std::array<bool, 256> hit{};
    for (int w = 0; w < 256; ++w) {
      int t = dst.word_at(src.label(w));
      map.forward[w] = static_cast<std::uint8_t>(t);
      map.inverse[t] = static_cast<std::uint8_t>(w);
      hit[t] = true;
    }
    for (int w = 0; w < 256; ++w)
      if (!hit[w]) throw std::logic_error("SubstitutionMap: label transport is not a bijection");
    return map;
  }

  // 256 lines "<F4 source word> <Z4 target word>" in source order.
  std::string export_text() const {
    std::string out;
    for (int w = 0; w < 256; ++w) {
      for (int c = 0; c < 4; ++c) out.push_back(F4(word_digit(w, c)).symbol());
      out.push_back(' ');
      for (int c = 0; c < 4; ++c) out.push_back(Z4(word_digit(forward[w], c)).symbol());
      out.push_back('\n');
    }
    return out;
  }
};

inline const SubstitutionMap& substitution_map(MapFlavor flavor) {
  static const SubstitutionMap phi = SubstitutionMap::build(MapFlavor::Phi);
  static const SubstitutionMap psi = SubstitutionMap::build(MapFlavor::Psi);
  return flavor == MapFlavor::Phi ? phi : psi;
}

struct CosetCountingResult {
  bool pass = true;
  int words_checked = 0;
  std::string first_failure;
};

// For every ambient word, each of the 12 small-code cosets lying outside
// the word's big-code coset must contain exactly one of its 12 neighbors.
inline CosetCountingResult coset_neighbor_counting(const CosetPair& pair) {
  CosetCountingResult res;
  const auto& deltas = ambient_neighbor_deltas(pair.ambient());
  for (int w = 0; w < 256; ++w) {
    std::array<int, 16> per_coset{};
    for (int d : deltas) {
      int nb = ambient_add(pair.ambient(), w, d);
      CosetLabel l = pair.label(nb);
      ++per_coset[l.outer * 4 + l.inner];
    }
    CosetLabel lw = pair.label(w);
    for (int o = 0; o < 4; ++o)
      for (int i = 0; i < 4; ++i) {
        int want = (o == lw.outer) ? 0 : 1;
        if (per_coset[o * 4 + i] != want) {
          res.pass = false;
          if (res.first_failure.empty())
            res.first_failure = "word " + std::to_string(w) + ": coset (" + std::to_string(o) + "," +
                                std::to_string(i) + ") holds " + std::to_string(per_coset[o * 4 + i]) +
                                " neighbors, expected " + std::to_string(want);
        }
      }
    ++res.words_checked;
  }
  return res;
}

}  // namespace doob
