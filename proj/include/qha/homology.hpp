#pragma once
#include <optional>

#include "qha/rep.hpp"

namespace qha {

// Homological dimension verdict. AtLeast is an honest "unknown at this
// cutoff"; InfiniteCertified carries a verified isomorphism between two
// distinct nonzero syzygies, which pins the resolution to a cycle.
struct HomDim {
  enum class Kind { Finite, AtLeast, InfiniteCertified };
  Kind kind = Kind::Finite;
  int value = 0;                    // Finite: the dimension; AtLeast: cutoff
  int cert_i = -1, cert_j = -1;     // InfiniteCertified: omega^i = omega^j
  std::optional<Morphism> witness;

  static HomDim finite(int k) { return {Kind::Finite, k, -1, -1, std::nullopt}; }
  static HomDim at_least(int c) { return {Kind::AtLeast, c, -1, -1, std::nullopt}; }
  static HomDim infinite(int i, int j, Morphism w) {
    return {Kind::InfiniteCertified, 0, i, j, std::move(w)};
  }
  bool is_finite() const { return kind == Kind::Finite; }
  bool is_infinite() const { return kind == Kind::InfiniteCertified; }
  std::string str() const;
  bool same_verdict(const HomDim& o) const {
    return kind == o.kind && (kind != Kind::Finite || value == o.value);
  }
};

struct Cover {
  Representation cover;      // direct sum of indecomposable projectives
  Morphism epi;              // cover -> M, kernel inside rad(cover)
  DimVector top_multiplicity;  // copies of P(v) per vertex
};

// Minimal projective cover; the cover of 0 is the trivial pair.
Cover projective_cover(const Representation& m);
Representation syzygy(const Representation& m);
Representation cosyzygy(const Representation& m);

struct ResolutionStep {
  DimVector top_multiplicity;
  DimVector syzygy_dims;
};
struct ResolutionTrace {
  std::vector<ResolutionStep> steps;
  std::optional<std::pair<int, int>> periodicity;  // omega^i = omega^j
};
ResolutionTrace resolve_trace(const Representation& m, int max_steps,
                              std::uint64_t seed = 0);

HomDim projective_dimension(const Representation& m, int cutoff,
                            std::uint64_t seed = 0);
HomDim injective_dimension(const Representation& m, int cutoff,
                           std::uint64_t seed = 0);
HomDim global_dimension(const Algebra& a, int cutoff, std::uint64_t seed = 0);

}  // namespace qha
