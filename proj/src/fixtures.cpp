#include "qha/fixtures.hpp"

#include "qha/error.hpp"

namespace qha {
namespace fixtures {

namespace {

Arrow arrow(const Quiver& q, const std::string& label, const std::string& s,
            const std::string& t) {
  return {label, q.vertex_index(s), q.vertex_index(t)};
}

Relation monomial(const Quiver& q, const std::vector<std::string>& labels) {
  std::vector<int> ids;
  for (const auto& l : labels) ids.push_back(q.arrow_index(l));
  return Relation{{{Scalar(1), PathWord::of(q, ids)}}};
}

Relation commutator(const Quiver& q, const std::vector<std::string>& plus,
                    const std::vector<std::string>& minus) {
  std::vector<int> a, b;
  for (const auto& l : plus) a.push_back(q.arrow_index(l));
  for (const auto& l : minus) b.push_back(q.arrow_index(l));
  return Relation{
      {{Scalar(1), PathWord::of(q, a)}, {Scalar(-1), PathWord::of(q, b)}}};
}

}  // namespace

AlgebraDocument k() {
  AlgebraDocument d;
  d.quiver.vertices = {"1"};
  return d;
}

AlgebraDocument a2() {
  AlgebraDocument d;
  d.quiver.vertices = {"1", "2"};
  d.quiver.arrows.push_back(arrow(d.quiver, "a", "1", "2"));
  return d;
}

AlgebraDocument nr(int r) {
  if (r < 2) throw ValidationError("Nr needs r >= 2");
  AlgebraDocument d;
  d.quiver.vertices = {"1"};
  d.quiver.arrows.push_back(arrow(d.quiver, "x", "1", "1"));
  d.relations.push_back(monomial(d.quiver, std::vector<std::string>(r, "x")));
  return d;
}

AlgebraDocument kronecker() {
  AlgebraDocument d;
  d.quiver.vertices = {"0", "1"};
  d.quiver.arrows.push_back(arrow(d.quiver, "x0", "0", "1"));
  d.quiver.arrows.push_back(arrow(d.quiver, "x1", "0", "1"));
  return d;
}

AlgebraDocument beilinson2() {
  AlgebraDocument d;
  d.quiver.vertices = {"0", "1", "2"};
  // the two parallel triples of the Beilinson quiver carry distinct labels
  for (int i = 0; i < 3; ++i)
    d.quiver.arrows.push_back(
        arrow(d.quiver, "x" + std::to_string(i), "0", "1"));
  for (int i = 0; i < 3; ++i)
    d.quiver.arrows.push_back(
        arrow(d.quiver, "y" + std::to_string(i), "1", "2"));
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      d.relations.push_back(
          commutator(d.quiver, {"x" + std::to_string(i), "y" + std::to_string(j)},
                     {"x" + std::to_string(j), "y" + std::to_string(i)}));
  return d;
}

AlgebraDocument e41(int m, int n) {
  if (m < 2 || n < 1) throw ValidationError("E41 needs m >= 2 and n >= 1");
  AlgebraDocument d;
  for (int v = 1; v <= n + 4; ++v) d.quiver.vertices.push_back(std::to_string(v));
  auto& q = d.quiver;
  q.arrows.push_back(arrow(q, "a", "1", "1"));
  q.arrows.push_back(arrow(q, "b", "1", "2"));
  q.arrows.push_back(arrow(q, "g1", "2", "3"));
  q.arrows.push_back(arrow(q, "g2", "2", "3"));
  q.arrows.push_back(arrow(q, "d", "3", "4"));
  for (int i = 1; i <= n; ++i)
    q.arrows.push_back(arrow(q, "r" + std::to_string(i), std::to_string(i + 3),
                             std::to_string(i + 4)));
  q.arrows.push_back(arrow(q, "m1", std::to_string(n + 4), "1"));
  q.arrows.push_back(arrow(q, "m2", std::to_string(n + 4), "1"));

  std::string rn = "r" + std::to_string(n);
  d.relations.push_back(monomial(q, std::vector<std::string>(m, "a")));
  d.relations.push_back(monomial(q, {"a", "b"}));
  d.relations.push_back(commutator(q, {"g1", "d"}, {"g2", "d"}));
  d.relations.push_back(monomial(q, {rn, "m1", "a"}));
  d.relations.push_back(monomial(q, {rn, "m2", "a"}));
  d.relations.push_back(monomial(q, {"m1", "b"}));
  d.relations.push_back(monomial(q, {"m2", "b"}));
  return d;
}

AlgebraDocument by_name(const std::string& name, int r, int m, int n) {
  if (name == "K") return k();
  if (name == "A2") return a2();
  if (name == "Nr") return nr(r);
  if (name == "KR") return kronecker();
  if (name == "B2") return beilinson2();
  if (name == "E41") return e41(m, n);
  throw ValidationError("unknown fixture '" + name +
                        "' (expected K, A2, Nr, KR, B2 or E41)");
}

}  // namespace fixtures
}  // namespace qha
