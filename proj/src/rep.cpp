#include "qha/rep.hpp"

#include <numeric>
#include <random>

#include "qha/error.hpp"

namespace qha {

int DimVector::total() const { return std::accumulate(d.begin(), d.end(), 0); }

std::string DimVector::str() const {
  std::string s = "(";
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + ")";
}

int Representation::total() const {
  return std::accumulate(dims.begin(), dims.end(), 0);
}

Representation zero_rep(const Algebra& a) {
  Representation m;
  m.algebra = &a;
  m.dims.assign(a.num_vertices(), 0);
  for (int ai = 0; ai < a.num_arrows(); ++ai) m.mats.emplace_back(0, 0);
  return m;
}

Representation simple(const Algebra& a, int vertex) {
  if (vertex < 0 || vertex >= a.num_vertices())
    throw ValidationError("unknown vertex index");
  Representation m;
  m.algebra = &a;
  m.dims.assign(a.num_vertices(), 0);
  m.dims[vertex] = 1;
  for (const Arrow& ar : a.quiver().arrows)
    m.mats.emplace_back(m.dims[ar.target], m.dims[ar.source]);
  return m;
}

std::vector<std::vector<int>> projective_basis(const Algebra& a, int vertex) {
  std::vector<std::vector<int>> per(a.num_vertices());
  for (int i = 0; i < a.dim(); ++i) {
    const PathWord& w = a.basis_word(i);
    if (w.source == vertex) per[w.target].push_back(i);
  }
  return per;
}

Representation projective(const Algebra& a, int vertex) {
  if (vertex < 0 || vertex >= a.num_vertices())
    throw ValidationError("unknown vertex index");
  auto per = projective_basis(a, vertex);
  std::vector<int> pos(a.dim(), -1);
  for (int u = 0; u < a.num_vertices(); ++u)
    for (int k = 0; k < (int)per[u].size(); ++k) pos[per[u][k]] = k;

  Representation m;
  m.algebra = &a;
  for (const auto& lst : per) m.dims.push_back((int)lst.size());
  for (int ai = 0; ai < a.num_arrows(); ++ai) {
    const Arrow& ar = a.quiver().arrows[ai];
    Matrix mat(m.dims[ar.target], m.dims[ar.source]);
    int ab = a.arrow_basis_index(ai);
    for (int c = 0; c < (int)per[ar.source].size(); ++c) {
      for (const auto& [k, coef] : a.product(per[ar.source][c], ab))
        mat.at(pos[k], c) = coef;
    }
    m.mats.push_back(std::move(mat));
  }
  return m;
}

Representation injective(const Algebra& a, int vertex) {
  return dual(projective(a.opposite(), vertex));
}

void validate_rep(const Representation& m) {
  const Algebra& a = *m.algebra;
  if ((int)m.dims.size() != a.num_vertices() ||
      (int)m.mats.size() != a.num_arrows())
    throw InternalError("representation shape mismatch");
  for (int ai = 0; ai < a.num_arrows(); ++ai) {
    const Arrow& ar = a.quiver().arrows[ai];
    if (m.mats[ai].rows() != m.dims[ar.target] ||
        m.mats[ai].cols() != m.dims[ar.source])
      throw InternalError("arrow matrix shape mismatch");
  }
  if (!relations_vanish(m))
    throw InternalError("relations do not vanish on representation");
}

bool relations_vanish(const Representation& m) {
  const Algebra& a = *m.algebra;
  for (const Relation& r : a.relations()) {
    int s = r.source(), t = r.target();
    Matrix acc(m.dims[t], m.dims[s]);
    for (const auto& [c, p] : r.terms) {
      Matrix word = Matrix::identity(m.dims[s]);
      for (int ai : p.arrows) word = m.mats[ai] * word;
      acc = acc + word * c;
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

void validate_morphism(const Morphism& f) {
  const Algebra& a = *f.source.algebra;
  if (f.target.algebra != &a) throw InternalError("morphism across algebras");
  for (int ai = 0; ai < a.num_arrows(); ++ai) {
    const Arrow& ar = a.quiver().arrows[ai];
    Matrix lhs = f.blocks[ar.target] * f.source.mats[ai];
    Matrix rhs = f.target.mats[ai] * f.blocks[ar.source];
    if (!(lhs == rhs)) throw InternalError("morphism is not an intertwiner");
  }
}

std::vector<Scalar> act(const Representation& m, int source_vertex,
                        const std::vector<Scalar>& v,
                        const std::vector<int>& word) {
  std::vector<Scalar> cur = v;
  int at = source_vertex;
  for (int ai : word) {
    const Arrow& ar = m.algebra->quiver().arrows[ai];
    if (ar.source != at) throw InternalError("act: non-composable word");
    cur = m.mats[ai].apply(cur);
    at = ar.target;
  }
  return cur;
}

Spans full_spans(const Representation& m) {
  Spans s;
  for (int v = 0; v < (int)m.dims.size(); ++v) {
    ColumnSpan cs(m.dims[v]);
    for (int i = 0; i < m.dims[v]; ++i) {
      std::vector<Scalar> e(m.dims[v]);
      e[i] = Scalar(1);
      cs.add(std::move(e));
    }
    s.push_back(std::move(cs));
  }
  return s;
}

Spans closure(const Representation& m,
              const std::vector<std::vector<std::vector<Scalar>>>& gens) {
  const Algebra& a = *m.algebra;
  Spans s;
  for (int v = 0; v < a.num_vertices(); ++v) s.emplace_back(m.dims[v]);
  std::vector<std::pair<int, std::vector<Scalar>>> queue;
  for (int v = 0; v < a.num_vertices(); ++v)
    for (const auto& g : gens[v])
      if (s[v].add(g)) queue.emplace_back(v, g);
  while (!queue.empty()) {
    auto [v, vec] = std::move(queue.back());
    queue.pop_back();
    for (int ai = 0; ai < a.num_arrows(); ++ai) {
      const Arrow& ar = a.quiver().arrows[ai];
      if (ar.source != v) continue;
      std::vector<Scalar> img = m.mats[ai].apply(vec);
      bool nz = false;
      for (const auto& x : img)
        if (!x.is_zero()) {
          nz = true;
          break;
        }
      if (nz && s[ar.target].add(img)) queue.emplace_back(ar.target, std::move(img));
    }
  }
  return s;
}

Spans radical_spans(const Representation& m, const Spans& inside) {
  const Algebra& a = *m.algebra;
  std::vector<std::vector<std::vector<Scalar>>> gens(a.num_vertices());
  for (int ai = 0; ai < a.num_arrows(); ++ai) {
    const Arrow& ar = a.quiver().arrows[ai];
    for (int i = 0; i < inside[ar.source].size(); ++i)
      gens[ar.target].push_back(m.mats[ai].apply(inside[ar.source].basis_vector(i)));
  }
  return closure(m, gens);
}

int spans_total(const Spans& s) {
  int t = 0;
  for (const auto& cs : s) t += cs.size();
  return t;
}

SubRep spans_to_subrep(const Representation& m, const Spans& s) {
  const Algebra& a = *m.algebra;
  Representation sub;
  sub.algebra = &a;
  for (const auto& cs : s) sub.dims.push_back(cs.size());
  std::vector<Matrix> blocks;
  for (int v = 0; v < a.num_vertices(); ++v) blocks.push_back(s[v].basis_matrix());
  for (int ai = 0; ai < a.num_arrows(); ++ai) {
    const Arrow& ar = a.quiver().arrows[ai];
    Matrix mat(sub.dims[ar.target], sub.dims[ar.source]);
    for (int c = 0; c < sub.dims[ar.source]; ++c) {
      std::vector<Scalar> img = m.mats[ai].apply(s[ar.source].basis_vector(c));
      mat.set_column(c, s[ar.target].coords(std::move(img)));
    }
    sub.mats.push_back(std::move(mat));
  }
  Morphism incl{sub, m, std::move(blocks)};
#ifndef NDEBUG
  if (!relations_vanish(sub)) throw InternalError("submodule breaks relations");
#endif
  return SubRep{sub, std::move(incl)};
}

SubRep radical(const Representation& m) {
  return spans_to_subrep(m, radical_spans(m, full_spans(m)));
}

std::pair<Representation, Morphism> quotient(const Representation& m,
                                             const SubRep& s) {
  const Algebra& a = *m.algebra;
  // Per vertex: extend the submodule span by standard basis vectors; the
  // added vectors index the quotient basis, and coordinates on them give the
  // projection.
  std::vector<ColumnSpan> ext;
  std::vector<std::vector<int>> picked(a.num_vertices());
  std::vector<int> subdim(a.num_vertices());
  for (int v = 0; v < a.num_vertices(); ++v) {
    ColumnSpan cs(m.dims[v]);
    for (int c = 0; c < s.inclusion.blocks[v].cols(); ++c)
      cs.add(s.inclusion.blocks[v].column(c));
    subdim[v] = cs.size();
    for (int i = 0; i < m.dims[v]; ++i) {
      std::vector<Scalar> e(m.dims[v]);
      e[i] = Scalar(1);
      if (cs.add(std::move(e))) picked[v].push_back(i);
    }
    ext.push_back(std::move(cs));
  }
  Representation q;
  q.algebra = &a;
  for (int v = 0; v < a.num_vertices(); ++v) q.dims.push_back((int)picked[v].size());
  std::vector<Matrix> proj;
  for (int v = 0; v < a.num_vertices(); ++v) {
    Matrix p(q.dims[v], m.dims[v]);
    for (int i = 0; i < m.dims[v]; ++i) {
      std::vector<Scalar> e(m.dims[v]);
      e[i] = Scalar(1);
      std::vector<Scalar> co = ext[v].coords(std::move(e));
      for (int k = 0; k < q.dims[v]; ++k) p.at(k, i) = co[subdim[v] + k];
    }
    proj.push_back(std::move(p));
  }
  for (int ai = 0; ai < a.num_arrows(); ++ai) {
    const Arrow& ar = a.quiver().arrows[ai];
    Matrix lift(m.dims[ar.source], q.dims[ar.source]);
    for (int k = 0; k < q.dims[ar.source]; ++k)
      lift.at(picked[ar.source][k], k) = Scalar(1);
    q.mats.push_back(proj[ar.target] * (m.mats[ai] * lift));
  }
  Morphism pr{m, q, std::move(proj)};
#ifndef NDEBUG
  if (!relations_vanish(q)) throw InternalError("quotient breaks relations");
#endif
  return {pr.target, std::move(pr)};
}

std::pair<Representation, Morphism> top(const Representation& m) {
  auto [q, pr] = quotient(m, radical(m));
  // tops are semisimple: force exact zero arrows (they already are)
  return {q, pr};
}

SubRep socle(const Representation& m) {
  const Algebra& a = *m.algebra;
  Spans s;
  for (int v = 0; v < a.num_vertices(); ++v) {
    Matrix stacked(0, m.dims[v]);
    for (int ai = 0; ai < a.num_arrows(); ++ai)
      if (a.quiver().arrows[ai].source == v) stacked = stacked.vcat(m.mats[ai]);
    Matrix ns = stacked.nullspace();
    ColumnSpan cs(m.dims[v]);
    for (int c = 0; c < ns.cols(); ++c) cs.add(ns.column(c));
    s.push_back(std::move(cs));
  }
  return spans_to_subrep(m, s);
}

Representation dual(const Representation& m) {
  const Algebra& op = m.algebra->opposite();
  Representation d;
  d.algebra = &op;
  d.dims = m.dims;
  for (int ai = 0; ai < m.algebra->num_arrows(); ++ai)
    d.mats.push_back(m.mats[ai].transposed());
  return d;
}

std::vector<Morphism> hom_space(const Representation& m, const Representation& n) {
  if (m.algebra != n.algebra) throw InternalError("hom across algebras");
  const Algebra& a = *m.algebra;
  std::vector<int> off(a.num_vertices() + 1, 0);
  for (int v = 0; v < a.num_vertices(); ++v)
    off[v + 1] = off[v] + n.dims[v] * m.dims[v];
  int unknowns = off.back();
  std::vector<std::vector<Scalar>> rows;
  for (int ai = 0; ai < a.num_arrows(); ++ai) {
    const Arrow& ar = a.quiver().arrows[ai];
    // f_t M_a - N_a f_s = 0, entry (r, c) for r < n.dims[t], c < m.dims[s]
    for (int r = 0; r < n.dims[ar.target]; ++r)
      for (int c = 0; c < m.dims[ar.source]; ++c) {
        std::vector<Scalar> row(unknowns);
        bool nz = false;
        for (int k = 0; k < m.dims[ar.target]; ++k) {
          const Scalar& x = m.mats[ai].at(k, c);
          if (!x.is_zero()) {
            row[off[ar.target] + r * m.dims[ar.target] + k] += x;
            nz = true;
          }
        }
        for (int k = 0; k < n.dims[ar.source]; ++k) {
          const Scalar& x = n.mats[ai].at(r, k);
          if (!x.is_zero()) {
            row[off[ar.source] + k * m.dims[ar.source] + c] -= x;
            nz = true;
          }
        }
        if (nz) rows.push_back(std::move(row));
      }
  }
  Matrix sys((int)rows.size(), unknowns);
  for (int i = 0; i < (int)rows.size(); ++i)
    for (int j = 0; j < unknowns; ++j) sys.at(i, j) = std::move(rows[i][j]);
  Matrix ker = sys.nullspace();
  std::vector<Morphism> out;
  for (int c = 0; c < ker.cols(); ++c) {
    Morphism f{m, n, {}};
    for (int v = 0; v < a.num_vertices(); ++v) {
      Matrix b(n.dims[v], m.dims[v]);
      for (int r = 0; r < n.dims[v]; ++r)
        for (int cc = 0; cc < m.dims[v]; ++cc)
          b.at(r, cc) = ker.at(off[v] + r * m.dims[v] + cc, c);
      f.blocks.push_back(std::move(b));
    }
    out.push_back(std::move(f));
  }
  return out;
}

int hom_dim(const Representation& m, const Representation& n) {
  return (int)hom_space(m, n).size();
}

IsoResult is_isomorphic(const Representation& m, const Representation& n,
                        std::uint64_t seed, int trials) {
  if (m.algebra != n.algebra) throw InternalError("iso across algebras");
  if (m.dims != n.dims) return {};
  if (m.total() == 0) return {true, Morphism{m, n, std::vector<Matrix>(m.dims.size())}};
  std::vector<Morphism> basis = hom_space(m, n);
  if (basis.empty()) return {};
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const std::uint32_t p = m.algebra->field().p;
  auto draw = [&]() -> Scalar {
    if (p)
      return Scalar::mod_p((long long)(rng() % p), p);
    return Scalar((long long)(rng() % 2000001) - 1000000);
  };
  for (int t = 0; t < trials; ++t) {
    Morphism f{m, n, {}};
    std::vector<Scalar> cs;
    for (size_t i = 0; i < basis.size(); ++i) cs.push_back(draw());
    for (int v = 0; v < (int)m.dims.size(); ++v) {
      Matrix b(n.dims[v], m.dims[v]);
      for (size_t i = 0; i < basis.size(); ++i)
        if (!cs[i].is_zero()) b = b + basis[i].blocks[v] * cs[i];
      f.blocks.push_back(std::move(b));
    }
    bool inv = true;
    for (int v = 0; v < (int)m.dims.size(); ++v)
      if (!f.blocks[v].is_invertible()) {
        inv = false;
        break;
      }
    if (inv) return {true, std::move(f)};
  }
  return {};
}

SubRep submodule_generated(
    const Representation& m,
    const std::vector<std::vector<std::vector<Scalar>>>& gens) {
  return spans_to_subrep(m, closure(m, gens));
}

Representation direct_sum(const Algebra& a, const std::vector<Representation>& parts) {
  Representation out;
  out.algebra = &a;
  out.dims.assign(a.num_vertices(), 0);
  for (const auto& p : parts) {
    if (p.algebra != &a) throw InternalError("direct sum across algebras");
    for (int v = 0; v < a.num_vertices(); ++v) out.dims[v] += p.dims[v];
  }
  for (int ai = 0; ai < a.num_arrows(); ++ai) {
    const Arrow& ar = a.quiver().arrows[ai];
    Matrix m(out.dims[ar.target], out.dims[ar.source]);
    int ro = 0, co = 0;
    for (const auto& p : parts) {
      m.paste(ro, co, p.mats[ai]);
      ro += p.dims[ar.target];
      co += p.dims[ar.source];
    }
    out.mats.push_back(std::move(m));
  }
  return out;
}

SubRep kernel(const Morphism& f) {
  Spans s;
  for (int v = 0; v < (int)f.source.dims.size(); ++v) {
    Matrix ns = f.blocks[v].nullspace();
    ColumnSpan cs(f.source.dims[v]);
    for (int c = 0; c < ns.cols(); ++c) cs.add(ns.column(c));
    s.push_back(std::move(cs));
  }
  return spans_to_subrep(f.source, s);
}

SubRep image(const Morphism& f) {
  Spans s;
  for (int v = 0; v < (int)f.target.dims.size(); ++v) {
    ColumnSpan cs(f.target.dims[v]);
    for (int c = 0; c < f.blocks[v].cols(); ++c) cs.add(f.blocks[v].column(c));
    s.push_back(std::move(cs));
  }
  return spans_to_subrep(f.target, s);
}

Morphism compose(const Morphism& g, const Morphism& f) {
  Morphism h{f.source, g.target, {}};
  for (int v = 0; v < (int)f.source.dims.size(); ++v)
    h.blocks.push_back(g.blocks[v] * f.blocks[v]);
  return h;
}

Morphism identity_morphism(const Representation& m) {
  Morphism f{m, m, {}};
  for (int v = 0; v < (int)m.dims.size(); ++v)
    f.blocks.push_back(Matrix::identity(m.dims[v]));
  return f;
}

}  // namespace qha
