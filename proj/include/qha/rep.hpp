#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qha/algebra.hpp"

namespace qha {

struct DimVector {
  std::vector<int> d;

  int total() const;
  bool operator==(const DimVector&) const = default;
  std::string str() const;  // "(1,0,2)"
};

// A right module as a quiver representation: one space per vertex, one
// matrix per arrow mapping the source component into the target component.
struct Representation {
  const Algebra* algebra = nullptr;
  std::vector<int> dims;      // per vertex
  std::vector<Matrix> mats;   // per arrow: dims[target] x dims[source]

  int total() const;
  DimVector dim_vector() const { return {dims}; }
  bool is_zero() const { return total() == 0; }
};

struct Morphism {
  Representation source;
  Representation target;
  std::vector<Matrix> blocks;  // per vertex: target.dims[v] x source.dims[v]
};

// A submodule with its explicit inclusion (full-column-rank blocks).
struct SubRep {
  Representation sub;
  Morphism inclusion;  // sub -> ambient
};

Representation zero_rep(const Algebra& a);
Representation simple(const Algebra& a, int vertex);
Representation projective(const Algebra& a, int vertex);
Representation injective(const Algebra& a, int vertex);
// Basis indices of e_v Lambda grouped per target vertex, in basis order;
// this fixes the coordinates used by projective().
std::vector<std::vector<int>> projective_basis(const Algebra& a, int vertex);

// Shape and relation-vanishing checks; throws on violation.
void validate_rep(const Representation& m);
bool relations_vanish(const Representation& m);
void validate_morphism(const Morphism& f);

// v placed at source_vertex, pushed along the path word.
std::vector<Scalar> act(const Representation& m, int source_vertex,
                        const std::vector<Scalar>& v,
                        const std::vector<int>& word);

SubRep radical(const Representation& m);
// Semisimple quotient M/rad M with the projection.
std::pair<Representation, Morphism> top(const Representation& m);
SubRep socle(const Representation& m);
Representation dual(const Representation& m);
std::pair<Representation, Morphism> quotient(const Representation& m,
                                             const SubRep& s);

std::vector<Morphism> hom_space(const Representation& m, const Representation& n);
int hom_dim(const Representation& m, const Representation& n);

struct IsoResult {
  bool isomorphic = false;
  std::optional<Morphism> witness;  // exact invertible intertwiner
};
// Sound "yes" (verified witness); "no" is one-sided Monte Carlo.
IsoResult is_isomorphic(const Representation& m, const Representation& n,
                        std::uint64_t seed = 0, int trials = 20);

// Per-vertex generating vectors -> smallest submodule containing them.
SubRep submodule_generated(const Representation& m,
                           const std::vector<std::vector<std::vector<Scalar>>>& gens);

Representation direct_sum(const Algebra& a, const std::vector<Representation>& parts);

SubRep kernel(const Morphism& f);
SubRep image(const Morphism& f);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f
Morphism identity_morphism(const Representation& m);

// Internal workhorse: per-vertex echelon spans living inside an ambient
// representation, closed under the arrow action.
using Spans = std::vector<ColumnSpan>;
Spans full_spans(const Representation& m);
Spans closure(const Representation& m, const std::vector<std::vector<std::vector<Scalar>>>& gens);
Spans radical_spans(const Representation& m, const Spans& inside);
SubRep spans_to_subrep(const Representation& m, const Spans& s);
int spans_total(const Spans& s);

}  // namespace qha
