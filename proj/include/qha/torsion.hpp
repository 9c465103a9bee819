#pragma once
#include "qha/rep.hpp"

namespace qha {

// A subset V of the simples (identified with vertices). The induced torsion
// pair (T_V, F(V)) has T_V = { M : top M in add(S \ V) }.
struct SimpleSubset {
  std::vector<int> vertices;  // sorted, distinct

  static SimpleSubset of(const Algebra& a, std::vector<int> verts);
  static SimpleSubset from_labels(const Algebra& a,
                                  const std::vector<std::string>& labels);
  static SimpleSubset all(const Algebra& a);
  static SimpleSubset empty() { return {}; }

  bool contains(int v) const;
  bool is_all(const Algebra& a) const {
    return (int)vertices.size() == a.num_vertices();
  }
  std::string str(const Algebra& a) const;  // "{3,5}" with vertex labels
};

// Largest submodule whose top lies in add(S \ V): the decreasing fixpoint of
// "submodule generated by the components at vertices outside V".
SubRep torsion_radical(const SimpleSubset& v, const Representation& m);
std::pair<Representation, Morphism> torsion_quotient(const SimpleSubset& v,
                                                     const Representation& m);
bool is_torsionfree(const SimpleSubset& v, const Representation& m);
// F_{t_V}(M) = rad(t_V(M)).
Representation layer_step(const SimpleSubset& v, const Representation& m);

struct LayerTrace {
  struct Row {
    int torsion_dim;  // dim t_V(F^i(M))
    int next_dim;     // dim F^{i+1}(M)
  };
  std::vector<Row> rows;
  int layer_length = 0;
};

// Radical layer length: least i with t_V(F^i(M)) = 0, where F applies
// t_V and then the radical. Terminates in <= LL(Lambda) steps.
std::pair<int, LayerTrace> layer_length(const SimpleSubset& v,
                                        const Representation& m);
// ll^{t_V}(Lambda) = max over the indecomposable projectives.
int algebra_layer_length(const SimpleSubset& v, const Algebra& a);
std::vector<int> projective_layer_lengths(const SimpleSubset& v, const Algebra& a);

}  // namespace qha
