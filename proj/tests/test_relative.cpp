#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qha/bounds.hpp"
#include "qha/fixtures.hpp"
#include "qha/parse.hpp"
#include "qha/relative.hpp"

using namespace qha;

namespace {

struct Fixture {
  std::unique_ptr<const Algebra> a2 = build_document(fixtures::a2());
  std::unique_ptr<const Algebra> n2 = build_document(fixtures::nr(2));
  std::unique_ptr<const Algebra> b2 = build_document(fixtures::beilinson2());
  std::unique_ptr<const Algebra> e41 = build_document(fixtures::e41(4, 1));
};
Fixture& fix() {
  static Fixture f;
  return f;
}

}  // namespace

TEST_CASE("subcategory construction and verification") {
  const Algebra& a2 = *fix().a2;
  FiniteSubcategory x = add_projectives(a2);
  CHECK(x.contains_all_projectives);
  CHECK_FALSE(x.contains_all_injectives);  // I(1) = S(1) is not projective
  // pairwise non-isomorphic generators are enforced
  CHECK_THROWS_AS(make_subcategory(
                      a2, {projective(a2, 0), projective(a2, 0)}, true, false),
                  ValidationError);
  // over the self-injective loop algebra, add(P) contains the injectives too
  FiniteSubcategory xp = add_projectives(*fix().n2);
  CHECK(xp.contains_all_injectives);
}

TEST_CASE("End algebras") {
  const Algebra& n2 = *fix().n2;
  FiniteSubcategory xp = make_subcategory(n2, {projective(n2, 0)}, true, false);
  EndAlgebra e = end_algebra(xp);
  CHECK(e.dim() == 2);           // End(k[x]/x^2) = k[x]/x^2
  CHECK(e.radical_dim() == 1);

  const Algebra& a2 = *fix().a2;
  EndAlgebra es = end_algebra(
      make_subcategory(a2, {simple(a2, 0), simple(a2, 1)}, false, false));
  CHECK(es.dim() == 2);
  CHECK(es.radical_dim() == 0);

  EndAlgebra ep = end_algebra(add_projectives(a2));
  CHECK(ep.dim() == 3);          // End(P(1) + P(2)) = Lambda for A2
  CHECK(ep.radical_dim() == 1);

  // radical is nilpotent: multiply the radical subspace against itself
  {
    std::vector<std::vector<Scalar>> cur = ep.radical;
    int guard = 0;
    while (!cur.empty() && guard++ < 10) {
      ColumnSpan next(ep.dim());
      for (const auto& r : cur)
        for (const auto& r2 : ep.radical) {
          std::vector<Scalar> prod(ep.dim());
          for (int s = 0; s < ep.dim(); ++s)
            for (int t = 0; t < ep.dim(); ++t) {
              if (r[s].is_zero() || r2[t].is_zero()) continue;
              for (const auto& [u, c] : ep.table[s][t])
                prod[u] += r[s] * r2[t] * c;
            }
          next.add(std::move(prod));
        }
      cur.clear();
      for (int i = 0; i < next.size(); ++i) cur.push_back(next.basis_vector(i));
    }
    CHECK(cur.empty());
  }

  // prime fields are rejected
  AlgebraDocument doc = fixtures::nr(2);
  doc.field = FieldSpec{2};
  auto n2p = build_document(doc);
  CHECK_THROWS_AS(
      end_algebra(make_subcategory(*n2p, {projective(*n2p, 0)}, true, false)),
      UnsupportedFieldError);
}

TEST_CASE("minimal right approximations") {
  const Algebra& n2 = *fix().n2;
  FiniteSubcategory xp = make_subcategory(n2, {projective(n2, 0)}, true, false);
  // M already in add X: identity-like approximation with zero kernel
  Approximation a0 = minimal_right_approximation(xp, projective(n2, 0));
  CHECK(a0.multiplicities == std::vector<int>{1});
  CHECK(a0.kernel_rep.total() == 0);
  // X = projectives, M = S: the projective cover P -> S, kernel dim 1
  Approximation a1 = minimal_right_approximation(xp, simple(n2, 0));
  CHECK(a1.multiplicities == std::vector<int>{1});
  CHECK(a1.kernel_rep.total() == 1);

  const Algebra& b2 = *fix().b2;
  FiniteSubcategory xb = add_projectives(b2);
  for (int v = 0; v < 3; ++v) {
    Approximation ap = minimal_right_approximation(xb, simple(b2, v));
    Cover c = projective_cover(simple(b2, v));
    CHECK(ap.map.source.dims == c.cover.dims);
    CHECK(ap.kernel_rep.dims == kernel(c.epi).sub.dims);
  }
}

TEST_CASE("membership in add X") {
  const Algebra& b2 = *fix().b2;
  FiniteSubcategory x = add_projectives(b2);
  CHECK(in_add(x, projective(b2, 0)));
  CHECK(in_add(x, direct_sum(b2, {projective(b2, 0), projective(b2, 2)})));
  CHECK_FALSE(in_add(x, simple(b2, 0)));
  CHECK(in_add(x, zero_rep(b2)));
}

TEST_CASE("relative syzygies agree with ordinary syzygies for add(Lambda)") {
  for (const Algebra* a : {fix().a2.get(), fix().n2.get(), fix().b2.get()}) {
    FiniteSubcategory x = add_projectives(*a);
    for (int v = 0; v < a->num_vertices(); ++v) {
      Representation s = simple(*a, v);
      CHECK(relative_syzygy(x, s).dims == syzygy(s).dims);
      CHECK(relative_syzygy(x, projective(*a, v)).total() == 0);
    }
  }
  // X = {P} over N2: relative syzygy of S is S again
  const Algebra& n2 = *fix().n2;
  FiniteSubcategory xp = make_subcategory(n2, {projective(n2, 0)}, true, false);
  Representation o = relative_syzygy(xp, simple(n2, 0));
  CHECK(is_isomorphic(o, simple(n2, 0), 3).isomorphic);
}

TEST_CASE("relative pd") {
  const Algebra& n2 = *fix().n2;
  // X = {P, S} over N2 contains S, so pd_X S = 0
  FiniteSubcategory xps = make_subcategory(
      n2, {projective(n2, 0), simple(n2, 0)}, true, false);
  CHECK(relative_pd(xps, simple(n2, 0), 10).same_verdict(HomDim::finite(0)));
  // X = {P}: S has infinite relative dimension, certified by periodicity
  FiniteSubcategory xp = make_subcategory(n2, {projective(n2, 0)}, true, false);
  CHECK(relative_pd(xp, simple(n2, 0), 10).is_infinite());
  // generators have relative dimension zero
  CHECK(relative_pd(xp, projective(n2, 0), 10).same_verdict(HomDim::finite(0)));
  // zero module convention
  CHECK(relative_pd(xp, zero_rep(n2), 10).same_verdict(HomDim::finite(-1)));

  // refuse when projective coverage fails
  const Algebra& a2 = *fix().a2;
  FiniteSubcategory bad =
      make_subcategory(a2, {projective(a2, 0)}, true, false);
  CHECK_FALSE(bad.contains_all_projectives);
  CHECK_THROWS_AS(relative_pd(bad, simple(a2, 0), 10), ValidationError);
}

TEST_CASE("relative pd equals pd for add(Lambda) across the corpus") {
  for (const Algebra* a : {fix().b2.get(), fix().e41.get()}) {
    FiniteSubcategory x = add_projectives(*a);
    for (int v = 0; v < a->num_vertices(); ++v) {
      Representation s = simple(*a, v);
      HomDim rel = relative_pd(x, s, 40, 5);
      HomDim ord = projective_dimension(s, 40, 5);
      CHECK(rel.same_verdict(ord));
    }
  }
}

TEST_CASE("relative id via the opposite algebra") {
  const Algebra& n2 = *fix().n2;
  FiniteSubcategory xp = make_subcategory(n2, {projective(n2, 0)}, true, true);
  CHECK(xp.contains_all_injectives);  // self-injective
  CHECK(relative_id(xp, simple(n2, 0), 10).is_infinite());
  const Algebra& a2 = *fix().a2;
  FiniteSubcategory xa = add_projectives(a2);
  CHECK_THROWS_AS(relative_id(xa, simple(a2, 0), 10), ValidationError);
}

TEST_CASE("relative bound reproduces the closed form on the cyclic family") {
  const Algebra& e41 = *fix().e41;
  FiniteSubcategory x = add_projectives(e41);
  SimpleSubset v = SimpleSubset::of(e41, {2});
  RelativeBound rb = relative_bound(x, v, 50, 23);
  CHECK(rb.class_dim.same_verdict(HomDim::finite(1)));
  CHECK(rb.layer_length == 5);
  CHECK(rb.known);
  CHECK(rb.bound == 6);
  // V = S with X = add(Lambda): the bound is gldim when finite
  const Algebra& b2 = *fix().b2;
  RelativeBound rs =
      relative_bound(add_projectives(b2), SimpleSubset::all(b2), 50, 23);
  CHECK(rs.known);
  CHECK(rs.bound == 2);
  // V empty: -1 + LL(Lambda)
  RelativeBound re =
      relative_bound(add_projectives(b2), SimpleSubset::empty(), 50, 23);
  CHECK(re.class_dim.same_verdict(HomDim::finite(-1)));
  CHECK(re.bound == -1 + b2.loewy_length());
}

TEST_CASE("approximation factorization survives extra generators") {
  // adding a non-isomorphic module to X keeps multiplicities of the part of
  // the approximation that the top dictates
  const Algebra& b2 = *fix().b2;
  FiniteSubcategory small = add_projectives(b2);
  Approximation a_small = minimal_right_approximation(small, simple(b2, 0));
  std::vector<Representation> gens;
  for (int v = 0; v < 3; ++v) gens.push_back(projective(b2, v));
  gens.push_back(simple(b2, 1));
  FiniteSubcategory big = make_subcategory(b2, std::move(gens), false, false);
  Approximation a_big = minimal_right_approximation(big, simple(b2, 0));
  // Hom(S(1), S(0)) = 0, so the new generator contributes nothing
  CHECK(a_big.multiplicities ==
        std::vector<int>{a_small.multiplicities[0], a_small.multiplicities[1],
                         a_small.multiplicities[2], 0});
}
