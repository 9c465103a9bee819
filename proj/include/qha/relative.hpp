#pragma once
#include "qha/homology.hpp"
#include "qha/torsion.hpp"

namespace qha {

// add(X_1 .. X_k) for declared-indecomposable, pairwise non-isomorphic
// generators. The projective/injective coverage flags are verified against
// the algebra; resolving/coresolving closure is the caller's assertion.
struct FiniteSubcategory {
  const Algebra* algebra = nullptr;
  std::vector<Representation> generators;
  bool contains_all_projectives = false;
  bool contains_all_injectives = false;
  bool asserted_resolving = false;
  bool asserted_coresolving = false;
};

FiniteSubcategory make_subcategory(const Algebra& a,
                                   std::vector<Representation> generators,
                                   bool assert_resolving,
                                   bool assert_coresolving,
                                   std::uint64_t seed = 0);
// add(Lambda): all indecomposable projectives.
FiniteSubcategory add_projectives(const Algebra& a, std::uint64_t seed = 0);
// Generators dualized over the opposite algebra; coverage flags swap.
FiniteSubcategory opposite_subcategory(const FiniteSubcategory& x);

// End(X_1 + ... + X_k) with basis the Hom-space bases of all pairs,
// products by composition, and the radical cut out by the trace form of the
// regular representation (rationals only).
struct EndAlgebra {
  const FiniteSubcategory* category = nullptr;
  std::vector<Morphism> basis;                // basis element t: X_b -> X_a
  std::vector<std::pair<int, int>> block;     // (target gen, source gen)
  std::vector<std::vector<LinComb>> table;    // table[s][t] = b_s o b_t
  std::vector<Scalar> unit;                   // coords of sum of identities
  std::vector<std::vector<Scalar>> radical;   // basis of rad E, in E-coords

  int dim() const { return (int)basis.size(); }
  int radical_dim() const { return (int)radical.size(); }
  Morphism element(int source_gen, int target_gen,
                   const std::vector<Scalar>& coords) const;
};

EndAlgebra end_algebra(const FiniteSubcategory& x);

struct Approximation {
  std::vector<int> multiplicities;  // copies of each generator
  Morphism map;                     // sum X_i^{m_i} -> M (right case)
  Representation kernel_rep;
};

// Minimal right add(X)-approximation of M, with factorization and
// minimality verified.
Approximation minimal_right_approximation(const FiniteSubcategory& x,
                                          const Representation& m);
Representation relative_syzygy(const FiniteSubcategory& x,
                               const Representation& m);
Representation relative_cosyzygy(const FiniteSubcategory& x,
                                 const Representation& m);
bool in_add(const FiniteSubcategory& x, const Representation& m);

// pd_X via iterated minimal approximations; requires the verified
// projective coverage (the finitely checkable part of "resolving").
HomDim relative_pd(const FiniteSubcategory& x, const Representation& m,
                   int cutoff, std::uint64_t seed = 0);
HomDim relative_id(const FiniteSubcategory& x, const Representation& m,
                   int cutoff, std::uint64_t seed = 0);

struct RelativeBound {
  HomDim class_dim;  // pd_X V (max over members, -1 for empty V)
  int layer_length;  // ll^{t_V}(Lambda)
  bool known;        // class_dim finite
  long long bound;   // pd_X V + ll^{t_V}(Lambda) when known
};
RelativeBound relative_bound(const FiniteSubcategory& x, const SimpleSubset& v,
                             int cutoff, std::uint64_t seed = 0);
// Dual route: id_X V + ll^{t_V}(Lambda).
RelativeBound relative_bound_injective(const FiniteSubcategory& x,
                                       const SimpleSubset& v, int cutoff,
                                       std::uint64_t seed = 0);

}  // namespace qha
