#pragma once
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "qha/matrix.hpp"
#include "qha/quiver.hpp"

namespace qha {

// Sparse vector in the normal-path basis, sorted by basis index.
using LinComb = std::vector<std::pair<int, Scalar>>;

LinComb lincomb_add(const LinComb& a, const LinComb& b, const Scalar& factor);

// A bound quiver algebra kQ/I with an explicit basis of normal paths and a
// multiplication table. The ideal must be generated by length-homogeneous
// relations, which makes it graded and the per-degree elimination exact.
class Algebra {
 public:
  // Compiles the algebra; throws CapError when the normal basis has not
  // terminated by max_path_length, ValidationError on bad inputs, and
  // InternalError if self-validation fails.
  static std::unique_ptr<const Algebra> build(Quiver quiver,
                                              std::vector<Relation> relations,
                                              FieldSpec field,
                                              int max_path_length = 64);

  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  const Quiver& quiver() const { return quiver_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<Relation>& relations() const { return relations_; }
  int num_vertices() const { return quiver_.num_vertices(); }
  int num_arrows() const { return quiver_.num_arrows(); }
  int dim() const { return (int)basis_.size(); }
  // 1 + maximal normal path length == least n with rad^n = 0.
  int loewy_length() const { return (int)layers_.size(); }

  const std::vector<PathWord>& basis() const { return basis_; }
  const PathWord& basis_word(int i) const { return basis_[i]; }
  // Basis indices per path length.
  const std::vector<std::vector<int>>& layers() const { return layers_; }
  int idempotent_index(int vertex) const { return idempotents_[vertex]; }
  int arrow_basis_index(int arrow) const { return arrow_basis_[arrow]; }

  // Product of basis elements in the normal basis (grading: empty unless
  // target of i meets source of j).
  const LinComb& product(int i, int j) const {
    return table_[(size_t)i * basis_.size() + j];
  }

  // Normal form of an arbitrary composable word starting at source_vertex.
  LinComb reduce_word(int source_vertex, const std::vector<int>& word) const;

  // The opposite algebra; built on first use, and opposite().opposite()
  // returns *this.
  const Algebra& opposite() const;

  Scalar scalar(long long n) const {
    return field_.is_rational() ? Scalar(n) : Scalar::mod_p(n, field_.p);
  }

 private:
  Algebra() = default;
  void compile(int max_path_length);
  void validate() const;

  Quiver quiver_;
  FieldSpec field_;
  std::vector<Relation> relations_;
  std::vector<PathWord> basis_;
  std::vector<std::vector<int>> layers_;
  std::vector<int> idempotents_;   // per vertex
  std::vector<int> arrow_basis_;   // per arrow
  std::vector<LinComb> table_;     // dim x dim, row-major

  // pivot word -> expansion into normal basis; normal word -> basis index
  std::map<std::vector<int>, LinComb> pivot_expansion_;
  std::map<std::vector<int>, int> normal_index_;

  mutable std::unique_ptr<const Algebra> opposite_owned_;
  mutable const Algebra* opposite_of_ = nullptr;
  mutable std::once_flag opposite_once_;
};

}  // namespace qha
