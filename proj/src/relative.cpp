#include "qha/relative.hpp"

#include <algorithm>

#include "qha/bounds.hpp"
#include "qha/error.hpp"

namespace qha {

namespace {

std::vector<Scalar> flatten(const Morphism& f) {
  std::vector<Scalar> out;
  for (const Matrix& b : f.blocks)
    for (int r = 0; r < b.rows(); ++r)
      for (int c = 0; c < b.cols(); ++c) out.push_back(b.at(r, c));
  return out;
}

}  // namespace

FiniteSubcategory make_subcategory(const Algebra& a,
                                   std::vector<Representation> generators,
                                   bool assert_resolving,
                                   bool assert_coresolving,
                                   std::uint64_t seed) {
  FiniteSubcategory x;
  x.algebra = &a;
  for (const auto& g : generators) {
    if (g.algebra != &a)
      throw ValidationError("subcategory generator over a different algebra");
    if (g.total() == 0)
      throw ValidationError("zero module cannot be a subcategory generator");
    validate_rep(g);
  }
  for (size_t i = 0; i < generators.size(); ++i)
    for (size_t j = i + 1; j < generators.size(); ++j)
      if (is_isomorphic(generators[i], generators[j], seed + i * 131 + j).isomorphic)
        throw ValidationError("subcategory generators " + std::to_string(i) +
                              " and " + std::to_string(j) + " are isomorphic");
  x.generators = std::move(generators);

  auto covered = [&](const Representation& m) {
    for (size_t i = 0; i < x.generators.size(); ++i)
      if (is_isomorphic(x.generators[i], m, seed + 977 * i).isomorphic) return true;
    return false;
  };
  x.contains_all_projectives = true;
  x.contains_all_injectives = true;
  for (int v = 0; v < a.num_vertices(); ++v) {
    if (!covered(projective(a, v))) x.contains_all_projectives = false;
    if (!covered(injective(a, v))) x.contains_all_injectives = false;
  }
  x.asserted_resolving = assert_resolving;
  x.asserted_coresolving = assert_coresolving;
  return x;
}

FiniteSubcategory add_projectives(const Algebra& a, std::uint64_t seed) {
  std::vector<Representation> gens;
  for (int v = 0; v < a.num_vertices(); ++v) gens.push_back(projective(a, v));
  return make_subcategory(a, std::move(gens), true, false, seed);
}

FiniteSubcategory opposite_subcategory(const FiniteSubcategory& x) {
  FiniteSubcategory op;
  op.algebra = &x.algebra->opposite();
  for (const auto& g : x.generators) op.generators.push_back(dual(g));
  op.contains_all_projectives = x.contains_all_injectives;
  op.contains_all_injectives = x.contains_all_projectives;
  op.asserted_resolving = x.asserted_coresolving;
  op.asserted_coresolving = x.asserted_resolving;
  return op;
}

Morphism EndAlgebra::element(int source_gen, int target_gen,
                             const std::vector<Scalar>& coords) const {
  const auto& gens = category->generators;
  Morphism out{gens[source_gen], gens[target_gen], {}};
  for (int v = 0; v < (int)gens[source_gen].dims.size(); ++v)
    out.blocks.emplace_back(gens[target_gen].dims[v], gens[source_gen].dims[v]);
  for (int t = 0; t < dim(); ++t) {
    if (coords[t].is_zero()) continue;
    if (block[t] != std::make_pair(target_gen, source_gen)) continue;
    for (int v = 0; v < (int)out.blocks.size(); ++v)
      out.blocks[v] = out.blocks[v] + basis[t].blocks[v] * coords[t];
  }
  return out;
}

EndAlgebra end_algebra(const FiniteSubcategory& x) {
  const Algebra& a = *x.algebra;
  if (!a.field().is_rational())
    throw UnsupportedFieldError(
        "End-algebra radical needs characteristic 0 (trace form)");
  EndAlgebra e;
  e.category = &x;
  const int k = (int)x.generators.size();

  // basis: Hom(X_j, X_i) for all pairs, tagged (i, j)
  std::vector<std::vector<std::vector<int>>> ids(k, std::vector<std::vector<int>>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (Morphism& f : hom_space(x.generators[j], x.generators[i])) {
        ids[i][j].push_back(e.dim());
        e.block.emplace_back(i, j);
        e.basis.push_back(std::move(f));
      }

  // per-block flattened spans for coordinate extraction
  std::vector<std::vector<ColumnSpan>> spans(k);
  auto flat_dim = [&](int i, int j) {
    int d = 0;
    for (int v = 0; v < a.num_vertices(); ++v)
      d += x.generators[i].dims[v] * x.generators[j].dims[v];
    return d;
  };
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      ColumnSpan cs(flat_dim(i, j));
      for (int t : ids[i][j]) cs.add(flatten(e.basis[t]));
      spans[i].push_back(std::move(cs));
    }
  auto expand = [&](int i, int j, const Morphism& f) {
    LinComb out;
    std::vector<Scalar> co = spans[i][j].coords(flatten(f));
    for (size_t t = 0; t < co.size(); ++t)
      if (!co[t].is_zero()) out.emplace_back(ids[i][j][t], co[t]);
    return out;
  };

  e.table.assign(e.dim(), std::vector<LinComb>(e.dim()));
  for (int s = 0; s < e.dim(); ++s)
    for (int t = 0; t < e.dim(); ++t) {
      auto [is, js] = e.block[s];
      auto [it, jt] = e.block[t];
      if (js != it) continue;  // b_s o b_t needs X_jt -> X_it = X_js -> X_is
      e.table[s][t] = expand(is, jt, compose(e.basis[s], e.basis[t]));
    }

  e.unit.assign(e.dim(), Scalar(0));
  for (int i = 0; i < k; ++i) {
    std::vector<Scalar> co =
        spans[i][i].coords(flatten(identity_morphism(x.generators[i])));
    for (size_t t = 0; t < co.size(); ++t) e.unit[ids[i][i][t]] += co[t];
  }

  // trace of left multiplication per basis element, then the trace form
  std::vector<Scalar> trL(e.dim());
  for (int u = 0; u < e.dim(); ++u) {
    Scalar tr(0);
    for (int t = 0; t < e.dim(); ++t)
      for (const auto& [w, c] : e.table[u][t])
        if (w == t) tr += c;
    trL[u] = tr;
  }
  Matrix gram(e.dim(), e.dim());
  for (int s = 0; s < e.dim(); ++s)
    for (int t = 0; t < e.dim(); ++t) {
      Scalar g(0);
      for (const auto& [w, c] : e.table[s][t]) g += c * trL[w];
      gram.at(s, t) = g;
    }
  Matrix rad = gram.nullspace();
  for (int c = 0; c < rad.cols(); ++c) e.radical.push_back(rad.column(c));
  return e;
}

namespace {

// Morphism X_j -> X_i carved out of an E-element's (i, j) block.
Morphism block_component(const EndAlgebra& e, const std::vector<Scalar>& coords,
                         int i, int j) {
  return e.element(j, i, [&] {
    std::vector<Scalar> masked(coords.size());
    for (int t = 0; t < e.dim(); ++t)
      if (e.block[t] == std::make_pair(i, j)) masked[t] = coords[t];
    return masked;
  }());
}

}  // namespace

Approximation minimal_right_approximation(const FiniteSubcategory& x,
                                          const Representation& m) {
  const Algebra& a = *x.algebra;
  if (m.algebra != &a) throw ValidationError("module over a different algebra");
  EndAlgebra e = end_algebra(x);
  const int k = (int)x.generators.size();

  // Hom(X_i, M) bases
  std::vector<std::vector<Morphism>> hom(k);
  for (int i = 0; i < k; ++i) hom[i] = hom_space(x.generators[i], m);

  Approximation ap;
  ap.multiplicities.assign(k, 0);
  std::vector<std::pair<int, const Morphism*>> chosen;  // (gen, map)

  for (int i = 0; i < k; ++i) {
    int hd = 0;
    for (int v = 0; v < a.num_vertices(); ++v)
      hd += m.dims[v] * x.generators[i].dims[v];
    // span of Hom(X, M) rad E restricted to the X_i block
    ColumnSpan reach(hd);
    for (const auto& r : e.radical)
      for (int j = 0; j < k; ++j) {
        Morphism rho = block_component(e, r, j, i);  // X_i -> X_j
        for (const Morphism& phi : hom[j]) reach.add(flatten(compose(phi, rho)));
      }
    int rdim = reach.size();

    // division algebra D_i = End(X_i) / rad-part: lift a complement basis
    std::vector<const Morphism*> dlift;
    {
      int ld = 0;
      for (int v = 0; v < a.num_vertices(); ++v)
        ld += x.generators[i].dims[v] * x.generators[i].dims[v];
      ColumnSpan seen(ld);
      for (const auto& r : e.radical) {
        Morphism rho = block_component(e, r, i, i);
        seen.add(flatten(rho));
      }
      for (int t = 0; t < e.dim(); ++t)
        if (e.block[t] == std::make_pair(i, i) && seen.add(flatten(e.basis[t])))
          dlift.push_back(&e.basis[t]);
    }

    ColumnSpan w = reach;
    for (const Morphism& phi : hom[i]) {
      if (w.contains(flatten(phi))) continue;
      chosen.emplace_back(i, &phi);
      ++ap.multiplicities[i];
      for (const Morphism* d : dlift) w.add(flatten(compose(phi, *d)));
    }
    int top_dim = (int)hom[i].size() - rdim;
    if ((int)dlift.size() * ap.multiplicities[i] != top_dim)
      throw InternalError("approximation multiplicities do not match the top");
  }

  std::vector<Representation> parts;
  for (const auto& [i, phi] : chosen) {
    (void)phi;
    parts.push_back(x.generators[i]);
  }
  Representation source = direct_sum(a, parts);
  Morphism f{source, m, {}};
  for (int v = 0; v < a.num_vertices(); ++v) {
    Matrix b(m.dims[v], source.dims[v]);
    int off = 0;
    for (const auto& [i, phi] : chosen) {
      b.paste(0, off, phi->blocks[v]);
      off += x.generators[i].dims[v];
    }
    f.blocks.push_back(std::move(b));
  }

  // factorization property: every Hom(X_j, M) basis map factors through f
  for (int j = 0; j < k; ++j) {
    if (hom[j].empty()) continue;
    std::vector<std::vector<Scalar>> cols;
    for (const auto& [i, phi] : chosen)
      for (const Morphism& h : hom_space(x.generators[j], x.generators[i]))
        cols.push_back(flatten(compose(*phi, h)));
    int fd = (int)flatten(hom[j][0]).size();
    Matrix sys(fd, (int)cols.size());
    for (int c = 0; c < (int)cols.size(); ++c) sys.set_column(c, cols[c]);
    for (const Morphism& psi : hom[j])
      if (!sys.solve(flatten(psi)))
        throw InternalError("approximation does not factor a Hom basis map");
  }

  ap.kernel_rep = kernel(f).sub;
  ap.map = std::move(f);
  return ap;
}

Representation relative_syzygy(const FiniteSubcategory& x,
                               const Representation& m) {
  return minimal_right_approximation(x, m).kernel_rep;
}

Representation relative_cosyzygy(const FiniteSubcategory& x,
                                 const Representation& m) {
  return dual(relative_syzygy(opposite_subcategory(x), dual(m)));
}

bool in_add(const FiniteSubcategory& x, const Representation& m) {
  if (m.total() == 0) return true;
  Approximation ap = minimal_right_approximation(x, m);
  for (int v = 0; v < (int)m.dims.size(); ++v)
    if (!ap.map.blocks[v].is_invertible()) return false;
  return true;
}

HomDim relative_pd(const FiniteSubcategory& x, const Representation& m,
                   int cutoff, std::uint64_t seed) {
  if (cutoff < 1) throw ValidationError("cutoff must be >= 1");
  if (!x.contains_all_projectives)
    throw ValidationError(
        "relative pd needs a resolving subcategory; projective coverage "
        "could not be verified");
  if (m.total() == 0) return HomDim::finite(-1);
  std::vector<Representation> chain = {m};
  for (int step = 0; step <= cutoff; ++step) {
    const Representation& cur = chain.back();
    if (in_add(x, cur)) return HomDim::finite(step);
    Representation next = relative_syzygy(x, cur);
    for (int i = 0; i < (int)chain.size(); ++i) {
      if (chain[i].dims != next.dims) continue;
      IsoResult iso = is_isomorphic(chain[i], next, seed + step * 7919 + i);
      if (iso.isomorphic)
        return HomDim::infinite(i, step + 1, std::move(*iso.witness));
    }
    chain.push_back(std::move(next));
  }
  return HomDim::at_least(cutoff);
}

HomDim relative_id(const FiniteSubcategory& x, const Representation& m,
                   int cutoff, std::uint64_t seed) {
  if (!x.contains_all_injectives)
    throw ValidationError(
        "relative id needs a coresolving subcategory; injective coverage "
        "could not be verified");
  FiniteSubcategory op = opposite_subcategory(x);
  return relative_pd(op, dual(m), cutoff, seed);
}

namespace {

RelativeBound assemble_bound(const Algebra& a, std::vector<HomDim> dims,
                             const SimpleSubset& v) {
  RelativeBound out;
  out.class_dim = class_dim_max(dims);
  out.layer_length = algebra_layer_length(v, a);
  out.known = out.class_dim.is_finite();
  out.bound = out.known ? out.class_dim.value + out.layer_length : 0;
  return out;
}

}  // namespace

RelativeBound relative_bound(const FiniteSubcategory& x, const SimpleSubset& v,
                             int cutoff, std::uint64_t seed) {
  const Algebra& a = *x.algebra;
  std::vector<HomDim> dims;
  for (int u : v.vertices)
    dims.push_back(relative_pd(x, simple(a, u), cutoff, seed + u));
  return assemble_bound(a, std::move(dims), v);
}

RelativeBound relative_bound_injective(const FiniteSubcategory& x,
                                       const SimpleSubset& v, int cutoff,
                                       std::uint64_t seed) {
  const Algebra& a = *x.algebra;
  std::vector<HomDim> dims;
  for (int u : v.vertices)
    dims.push_back(relative_id(x, simple(a, u), cutoff, seed + u));
  return assemble_bound(a, std::move(dims), v);
}

}  // namespace qha
