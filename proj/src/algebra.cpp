#include "qha/algebra.hpp"

#include <algorithm>

#include "qha/error.hpp"

namespace qha {

namespace {
constexpr size_t kWordExplosionGuard = 1u << 20;
}

LinComb lincomb_add(const LinComb& a, const LinComb& b, const Scalar& factor) {
  LinComb out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Scalar v = factor * b[j].second;
      if (!v.is_zero()) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      Scalar v = a[i].second + factor * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

std::unique_ptr<const Algebra> Algebra::build(Quiver quiver,
                                              std::vector<Relation> relations,
                                              FieldSpec field,
                                              int max_path_length) {
  if (max_path_length < 1) throw ValidationError("max_path_length must be >= 1");
  if (!field.is_rational() && !is_prime(field.p))
    throw ValidationError("field characteristic " + std::to_string(field.p) +
                          " is not prime");
  quiver.check();
  for (const Relation& r : relations) r.check(quiver);

  std::unique_ptr<Algebra> a(new Algebra());
  a->quiver_ = std::move(quiver);
  a->field_ = field;
  a->relations_ = std::move(relations);
  a->compile(max_path_length);
  a->validate();
  return a;
}

void Algebra::compile(int max_path_length) {
  const int nv = quiver_.num_vertices();
  const int na = quiver_.num_arrows();

  if (!field_.is_rational())
    for (Relation& r : relations_)
      for (auto& [c, p] : r.terms) c = Scalar::parse(c.str(), field_);

  idempotents_.assign(nv, -1);
  arrow_basis_.assign(na, -1);

  // words_by_len[l] = all composable words of length l, lex-sorted. The
  // degree-0 list stands for the trivial paths, one per vertex, in order.
  std::vector<std::vector<std::vector<int>>> words_by_len;
  auto word_source = [&](int len, int idx, const std::vector<int>& w) {
    return len == 0 ? idx : quiver_.arrows[w.front()].source;
  };
  auto word_target = [&](int len, int idx, const std::vector<int>& w) {
    return len == 0 ? idx : quiver_.arrows[w.back()].target;
  };

  bool terminated = false;
  for (int len = 0; len <= max_path_length && !terminated; ++len) {
    std::vector<std::vector<int>> words;
    if (len == 0) {
      words.assign(nv, {});
    } else if (len == 1) {
      for (int ai = 0; ai < na; ++ai) words.push_back({ai});
    } else {
      for (const auto& w : words_by_len[len - 1]) {
        int end = quiver_.arrows[w.back()].target;
        for (int ai = 0; ai < na; ++ai)
          if (quiver_.arrows[ai].source == end) {
            std::vector<int> nw = w;
            nw.push_back(ai);
            words.push_back(std::move(nw));
          }
      }
      std::sort(words.begin(), words.end());
      if (words.size() > kWordExplosionGuard)
        throw CapError("path count explodes at length " + std::to_string(len) +
                       "; the ideal does not look admissible");
    }
    words_by_len.push_back(words);

    std::map<std::vector<int>, int> col;
    for (size_t i = 0; i < words.size() && len > 0; ++i) col[words[i]] = (int)i;

    // Degree-len slice of the ideal, spanned by p * r * q.
    std::vector<std::vector<Scalar>> span_rows;
    for (const Relation& r : relations_) {
      int lr = r.length();
      if (lr > len) continue;
      for (int left = 0; left + lr <= len; ++left) {
        int right = len - lr - left;
        const auto& lws = words_by_len[left];
        const auto& rws = words_by_len[right];
        for (int pi = 0; pi < (int)lws.size(); ++pi) {
          if (word_target(left, pi, lws[pi]) != r.source()) continue;
          for (int qi = 0; qi < (int)rws.size(); ++qi) {
            if (word_source(right, qi, rws[qi]) != r.target()) continue;
            std::vector<Scalar> row(words.size());
            for (const auto& [c, term] : r.terms) {
              std::vector<int> w = lws[pi];
              w.insert(w.end(), term.arrows.begin(), term.arrows.end());
              w.insert(w.end(), rws[qi].begin(), rws[qi].end());
              auto it = col.find(w);
              if (it == col.end())
                throw InternalError("relation product is not a valid word");
              row[it->second] += c;
            }
            span_rows.push_back(std::move(row));
          }
        }
      }
    }

    Matrix m((int)span_rows.size(), (int)words.size());
    for (int i = 0; i < (int)span_rows.size(); ++i)
      for (int j = 0; j < (int)words.size(); ++j)
        m.at(i, j) = std::move(span_rows[i][j]);
    std::vector<int> pivots = m.rref();

    std::vector<bool> is_pivot(words.size(), false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<int> layer;
    std::vector<int> normal_pos(words.size(), -1);
    for (int j = 0; j < (int)words.size(); ++j) {
      if (is_pivot[j]) continue;
      int idx = (int)basis_.size();
      if (len == 0) {
        basis_.push_back(PathWord::trivial(j));
        idempotents_[j] = idx;
      } else {
        basis_.push_back(PathWord::of(quiver_, words[j]));
        if (len == 1) arrow_basis_[words[j][0]] = idx;
        normal_index_[words[j]] = idx;
      }
      layer.push_back(idx);
      normal_pos[j] = idx;
    }

    for (size_t k = 0; k < pivots.size(); ++k) {
      LinComb expansion;
      for (int j = 0; j < (int)words.size(); ++j) {
        if (is_pivot[j] || m.at((int)k, j).is_zero()) continue;
        expansion.emplace_back(normal_pos[j], -m.at((int)k, j));
      }
      pivot_expansion_[words[pivots[k]]] = std::move(expansion);
    }

    if (layer.empty() && len > 0) {
      terminated = true;
    } else {
      layers_.push_back(std::move(layer));
    }
  }
  if (!terminated)
    throw CapError(
        "NotFiniteDimensional: normal paths persist at max_path_length " +
        std::to_string(max_path_length));

  const int n = dim();
  table_.assign((size_t)n * n, {});
  for (int i = 0; i < n; ++i) {
    const PathWord& pi = basis_[i];
    for (int j = 0; j < n; ++j) {
      const PathWord& pj = basis_[j];
      if (pi.target != pj.source) continue;
      std::vector<int> w = pi.arrows;
      w.insert(w.end(), pj.arrows.begin(), pj.arrows.end());
      table_[(size_t)i * n + j] = reduce_word(pi.source, w);
    }
  }
}

LinComb Algebra::reduce_word(int source_vertex, const std::vector<int>& word) const {
  if (word.empty()) return {{idempotents_[source_vertex], scalar(1)}};
  if ((int)word.size() >= loewy_length()) return {};
  auto nit = normal_index_.find(word);
  if (nit != normal_index_.end()) return {{nit->second, scalar(1)}};
  auto pit = pivot_expansion_.find(word);
  if (pit != pivot_expansion_.end()) return pit->second;
  throw InternalError("word escaped the reduction table");
}

void Algebra::validate() const {
  const int n = dim();
  if (layers_.empty() || (int)layers_[0].size() != num_vertices())
    throw InternalError("degree-0 basis layer is not the vertex idempotents");

  for (const Relation& r : relations_) {
    LinComb acc;
    for (const auto& [c, p] : r.terms)
      acc = lincomb_add(acc, reduce_word(p.source, p.arrows), c);
    if (!acc.empty())
      throw InternalError("relation does not vanish in the basis");
  }

  for (int v = 0; v < num_vertices(); ++v)
    for (int w = 0; w < num_vertices(); ++w) {
      const LinComb& p = product(idempotents_[v], idempotents_[w]);
      if (v == w) {
        if (!(p.size() == 1 && p[0].first == idempotents_[v] &&
              p[0].second.is_one()))
          throw InternalError("idempotent square broken");
      } else if (!p.empty()) {
        throw InternalError("idempotent orthogonality broken");
      }
    }
  for (int i = 0; i < n; ++i) {
    const PathWord& b = basis_[i];
    LinComb expect = {{i, scalar(1)}};
    if (product(idempotents_[b.source], i) != expect ||
        product(i, idempotents_[b.target]) != expect)
      throw InternalError("unit does not act as identity");
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : product(i, j)) {
        (void)c;
        if (basis_[k].length() != basis_[i].length() + basis_[j].length())
          throw InternalError("product table breaks the grading");
      }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (basis_[i].target != basis_[j].source) continue;
      const LinComb& ij = product(i, j);
      for (int k = 0; k < n; ++k) {
        if (basis_[j].target != basis_[k].source) continue;
        LinComb lhs;
        for (const auto& [t, c] : ij) lhs = lincomb_add(lhs, product(t, k), c);
        LinComb rhs;
        for (const auto& [t, c] : product(j, k))
          rhs = lincomb_add(rhs, product(i, t), c);
        if (lhs != rhs) throw InternalError("product table not associative");
      }
    }
}

const Algebra& Algebra::opposite() const {
  if (opposite_of_) return *opposite_of_;
  std::call_once(opposite_once_, [this] {
    std::vector<Relation> rels;
    for (const Relation& r : relations_) rels.push_back(r.reversed(quiver_));
    auto op = Algebra::build(quiver_.opposite(), std::move(rels), field_,
                             std::max(1, loewy_length() + 1));
    op->opposite_of_ = this;
    opposite_owned_ = std::move(op);
  });
  return *opposite_owned_;
}

}  // namespace qha
