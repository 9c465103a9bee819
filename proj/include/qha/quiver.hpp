#pragma once
#include <string>
#include <vector>

#include "qha/scalar.hpp"

namespace qha {

struct Arrow {
  std::string label;
  int source = 0;
  int target = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int num_vertices() const { return (int)vertices.size(); }
  int num_arrows() const { return (int)arrows.size(); }
  int vertex_index(const std::string& label) const;  // throws ValidationError
  int arrow_index(const std::string& label) const;
  // Label uniqueness and endpoint sanity.
  void check() const;

  Quiver opposite() const;
};

// A path, composed left to right: arrows[k] ends where arrows[k+1] starts.
// An empty arrow list is the trivial path e_v with source == target == v.
struct PathWord {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  int length() const { return (int)arrows.size(); }
  bool operator==(const PathWord&) const = default;

  static PathWord trivial(int v) { return {v, v, {}}; }
  // Builds from an arrow list, checking composability.
  static PathWord of(const Quiver& q, const std::vector<int>& arrows);
  PathWord reversed(const Quiver& original) const;
  std::string str(const Quiver& q) const;
};

// A linear combination of parallel paths of equal length >= 2.
struct Relation {
  std::vector<std::pair<Scalar, PathWord>> terms;

  int length() const { return terms.front().second.length(); }
  int source() const { return terms.front().second.source; }
  int target() const { return terms.front().second.target; }
  void check(const Quiver& q) const;
  Relation reversed(const Quiver& original) const;
};

}  // namespace qha
