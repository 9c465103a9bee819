#include "qha/torsion.hpp"

#include <algorithm>

#include "qha/error.hpp"

namespace qha {

SimpleSubset SimpleSubset::of(const Algebra& a, std::vector<int> verts) {
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (int v : verts)
    if (v < 0 || v >= a.num_vertices())
      throw ValidationError("subset mentions unknown vertex");
  return {std::move(verts)};
}

SimpleSubset SimpleSubset::from_labels(const Algebra& a,
                                       const std::vector<std::string>& labels) {
  std::vector<int> verts;
  for (const auto& l : labels) verts.push_back(a.quiver().vertex_index(l));
  return of(a, std::move(verts));
}

SimpleSubset SimpleSubset::all(const Algebra& a) {
  std::vector<int> verts(a.num_vertices());
  for (int i = 0; i < a.num_vertices(); ++i) verts[i] = i;
  return {std::move(verts)};
}

bool SimpleSubset::contains(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

std::string SimpleSubset::str(const Algebra& a) const {
  std::string s = "{";
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (i) s += ",";
    s += a.quiver().vertices[vertices[i]];
  }
  return s + "}";
}

namespace {

// t_V of a subspace chain, all inside the ambient module m.
Spans torsion_spans(const SimpleSubset& v, const Representation& m,
                    const Spans& cur) {
  const Algebra& a = *m.algebra;
  Spans now = cur;
  while (true) {
    std::vector<std::vector<std::vector<Scalar>>> gens(a.num_vertices());
    for (int u = 0; u < a.num_vertices(); ++u) {
      if (v.contains(u)) continue;
      for (int i = 0; i < now[u].size(); ++i)
        gens[u].push_back(now[u].basis_vector(i));
    }
    Spans next = closure(m, gens);
    bool same = true;
    for (int u = 0; u < a.num_vertices(); ++u)
      if (next[u].size() != now[u].size()) {
        same = false;
        break;
      }
    if (same) return next;
    now = std::move(next);
  }
}

// Composition-series membership in F(V): every radical layer of m is
// supported on V-vertices.
bool filtered_by(const SimpleSubset& v, const Representation& m) {
  Spans cur = full_spans(m);
  while (spans_total(cur) > 0) {
    Spans rad = radical_spans(m, cur);
    for (int u = 0; u < (int)m.dims.size(); ++u)
      if (cur[u].size() > rad[u].size() && !v.contains(u)) return false;
    cur = std::move(rad);
  }
  return true;
}

}  // namespace

SubRep torsion_radical(const SimpleSubset& v, const Representation& m) {
  return spans_to_subrep(m, torsion_spans(v, m, full_spans(m)));
}

std::pair<Representation, Morphism> torsion_quotient(const SimpleSubset& v,
                                                     const Representation& m) {
  return quotient(m, torsion_radical(v, m));
}

bool is_torsionfree(const SimpleSubset& v, const Representation& m) {
  bool free = spans_total(torsion_spans(v, m, full_spans(m))) == 0;
  if (free && !filtered_by(v, m))
    throw InternalError("torsion-free module not filtered by V");
  return free;
}

Representation layer_step(const SimpleSubset& v, const Representation& m) {
  Spans t = torsion_spans(v, m, full_spans(m));
  return spans_to_subrep(m, radical_spans(m, t)).sub;
}

std::pair<int, LayerTrace> layer_length(const SimpleSubset& v,
                                        const Representation& m) {
  LayerTrace trace;
  Spans cur = full_spans(m);
  int i = 0;
  while (true) {
    Spans t = torsion_spans(v, m, cur);
    int tdim = spans_total(t);
    if (tdim == 0) {
      trace.layer_length = i;
      return {i, trace};
    }
    Spans next = radical_spans(m, t);
    int ndim = spans_total(next);
    trace.rows.push_back({tdim, ndim});
    if (ndim >= tdim) throw InternalError("layer iteration is not decreasing");
    cur = std::move(next);
    ++i;
  }
}

std::vector<int> projective_layer_lengths(const SimpleSubset& v, const Algebra& a) {
  std::vector<int> out;
  for (int u = 0; u < a.num_vertices(); ++u)
    out.push_back(layer_length(v, projective(a, u)).first);
  return out;
}

int algebra_layer_length(const SimpleSubset& v, const Algebra& a) {
  int best = 0;
  for (int l : projective_layer_lengths(v, a)) best = std::max(best, l);
  return best;
}

}  // namespace qha
