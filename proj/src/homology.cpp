#include "qha/homology.hpp"

#include "qha/error.hpp"

namespace qha {

std::string HomDim::str() const {
  switch (kind) {
    case Kind::Finite:
      return std::to_string(value);
    case Kind::AtLeast:
      return ">=" + std::to_string(value) + " (unknown)";
    case Kind::InfiniteCertified:
      return "inf (certified: syzygy " + std::to_string(cert_i) +
             " = syzygy " + std::to_string(cert_j) + ")";
  }
  return "?";
}

Cover projective_cover(const Representation& m) {
  const Algebra& a = *m.algebra;
  if (m.total() == 0) {
    Representation z = zero_rep(a);
    Morphism epi{z, m, {}};
    for (int v = 0; v < a.num_vertices(); ++v)
      epi.blocks.emplace_back(m.dims[v], 0);
    return {z, std::move(epi), DimVector{std::vector<int>(a.num_vertices(), 0)}};
  }

  // Lift a basis of top(M): per vertex, standard vectors completing rad(M).
  Spans rad = radical_spans(m, full_spans(m));
  std::vector<std::pair<int, std::vector<Scalar>>> lifts;  // (vertex, vector)
  std::vector<int> mult(a.num_vertices(), 0);
  for (int v = 0; v < a.num_vertices(); ++v) {
    ColumnSpan cs(m.dims[v]);
    for (int i = 0; i < rad[v].size(); ++i) {
      auto vec = rad[v].basis_vector(i);
      cs.add(std::move(vec));
    }
    for (int i = 0; i < m.dims[v]; ++i) {
      std::vector<Scalar> e(m.dims[v]);
      e[i] = Scalar(1);
      if (cs.add(e)) {
        lifts.emplace_back(v, std::move(e));
        ++mult[v];
      }
    }
  }

  std::vector<Representation> parts;
  parts.reserve(lifts.size());
  for (const auto& [v, vec] : lifts) parts.push_back(projective(a, v));
  Representation cover = direct_sum(a, parts);

  Morphism epi{cover, m, {}};
  for (int v = 0; v < a.num_vertices(); ++v)
    epi.blocks.emplace_back(m.dims[v], cover.dims[v]);
  std::vector<int> off(a.num_vertices(), 0);
  for (size_t bi = 0; bi < lifts.size(); ++bi) {
    const auto& [pv, lift] = lifts[bi];
    auto per = projective_basis(a, pv);
    for (int u = 0; u < a.num_vertices(); ++u) {
      for (int k = 0; k < (int)per[u].size(); ++k) {
        const PathWord& w = a.basis_word(per[u][k]);
        std::vector<Scalar> img = act(m, pv, lift, w.arrows);
        for (int r = 0; r < m.dims[u]; ++r)
          epi.blocks[u].at(r, off[u] + k) = img[r];
      }
      off[u] += (int)per[u].size();
    }
  }
  return {std::move(cover), std::move(epi), DimVector{std::move(mult)}};
}

Representation syzygy(const Representation& m) {
  return kernel(projective_cover(m).epi).sub;
}

Representation cosyzygy(const Representation& m) {
  return dual(syzygy(dual(m)));
}

namespace {

struct ResolveOutcome {
  HomDim verdict;
  ResolutionTrace trace;
};

ResolveOutcome resolve(const Representation& m, int cutoff, std::uint64_t seed,
                       bool want_trace, int trace_steps) {
  ResolveOutcome out;
  if (m.total() == 0) {
    out.verdict = HomDim::finite(-1);
    return out;
  }
  std::vector<Representation> omegas = {m};
  int limit = want_trace ? trace_steps : cutoff;
  for (int step = 1; step <= limit; ++step) {
    Cover c = projective_cover(omegas.back());
    Representation next = kernel(c.epi).sub;
    if (want_trace)
      out.trace.steps.push_back({c.top_multiplicity, next.dim_vector()});
    if (next.total() == 0) {
      out.verdict = HomDim::finite(step - 1);
      return out;
    }
    for (int i = 0; i < (int)omegas.size(); ++i) {
      if (omegas[i].total() == 0 || omegas[i].dims != next.dims) continue;
      IsoResult iso = is_isomorphic(omegas[i], next, seed + step * 1299709 + i);
      if (iso.isomorphic) {
        out.verdict = HomDim::infinite(i, step, std::move(*iso.witness));
        out.trace.periodicity = {i, step};
        return out;
      }
    }
    omegas.push_back(std::move(next));
  }
  out.verdict = HomDim::at_least(limit);
  return out;
}

}  // namespace

ResolutionTrace resolve_trace(const Representation& m, int max_steps,
                              std::uint64_t seed) {
  return resolve(m, max_steps, seed, true, max_steps).trace;
}

HomDim projective_dimension(const Representation& m, int cutoff,
                            std::uint64_t seed) {
  if (cutoff < 1) throw ValidationError("cutoff must be >= 1");
  return resolve(m, cutoff, seed, false, 0).verdict;
}

HomDim injective_dimension(const Representation& m, int cutoff,
                           std::uint64_t seed) {
  return projective_dimension(dual(m), cutoff, seed);
}

HomDim global_dimension(const Algebra& a, int cutoff, std::uint64_t seed) {
  HomDim best = HomDim::finite(0);
  bool any_atleast = false;
  int max_val = 0;
  for (int v = 0; v < a.num_vertices(); ++v) {
    HomDim d = projective_dimension(simple(a, v), cutoff, seed + v);
    if (d.is_infinite()) return d;
    if (d.kind == HomDim::Kind::AtLeast) any_atleast = true;
    max_val = std::max(max_val, d.value);
  }
  if (any_atleast) return HomDim::at_least(max_val);
  best.value = max_val;
  return best;
}

}  // namespace qha
