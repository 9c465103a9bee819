#include "qha/quiver.hpp"

#include <algorithm>
#include <set>

#include "qha/error.hpp"

namespace qha {

int Quiver::vertex_index(const std::string& label) const {
  for (int i = 0; i < num_vertices(); ++i)
    if (vertices[i] == label) return i;
  throw ValidationError("unknown vertex '" + label + "'");
}

int Quiver::arrow_index(const std::string& label) const {
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows[i].label == label) return i;
  throw ValidationError("unknown arrow '" + label + "'");
}

void Quiver::check() const {
  std::set<std::string> vl(vertices.begin(), vertices.end());
  if ((int)vl.size() != num_vertices())
    throw ValidationError("duplicate vertex labels");
  std::set<std::string> al;
  for (const Arrow& a : arrows) {
    if (!al.insert(a.label).second)
      throw ValidationError("duplicate arrow label '" + a.label + "'");
    if (a.source < 0 || a.source >= num_vertices() || a.target < 0 ||
        a.target >= num_vertices())
      throw ValidationError("arrow '" + a.label + "' has undeclared endpoint");
  }
}

Quiver Quiver::opposite() const {
  Quiver q;
  q.vertices = vertices;
  q.arrows = arrows;
  for (Arrow& a : q.arrows) std::swap(a.source, a.target);
  return q;
}

PathWord PathWord::of(const Quiver& q, const std::vector<int>& arrow_ids) {
  if (arrow_ids.empty())
    throw ValidationError("trivial path needs an explicit vertex");
  PathWord p;
  p.arrows = arrow_ids;
  p.source = q.arrows[arrow_ids.front()].source;
  int at = p.source;
  for (int a : arrow_ids) {
    if (q.arrows[a].source != at)
      throw ValidationError("non-composable path through arrow '" +
                            q.arrows[a].label + "'");
    at = q.arrows[a].target;
  }
  p.target = at;
  return p;
}

PathWord PathWord::reversed(const Quiver&) const {
  PathWord p;
  p.source = target;
  p.target = source;
  p.arrows.assign(arrows.rbegin(), arrows.rend());
  return p;
}

std::string PathWord::str(const Quiver& q) const {
  if (arrows.empty()) return "e_" + q.vertices[source];
  std::string s;
  for (int a : arrows) {
    if (!s.empty()) s += "*";
    s += q.arrows[a].label;
  }
  return s;
}

void Relation::check(const Quiver& q) const {
  if (terms.empty()) throw ValidationError("relation with no terms");
  const PathWord& first = terms.front().second;
  for (const auto& [c, p] : terms) {
    if (c.is_zero()) throw ValidationError("zero coefficient in relation");
    if (p.length() < 2)
      throw ValidationError("relation term of length < 2 (ideal not admissible)");
    if (p.length() != first.length())
      throw ValidationError("non-homogeneous relation");
    if (p.source != first.source || p.target != first.target)
      throw ValidationError("non-parallel relation terms");
    PathWord::of(q, p.arrows);  // composability
  }
}

Relation Relation::reversed(const Quiver& original) const {
  Relation r;
  for (const auto& [c, p] : terms) r.terms.emplace_back(c, p.reversed(original));
  return r;
}

}  // namespace qha
