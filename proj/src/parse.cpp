#include "qha/parse.hpp"

#include <json.hpp>

#include "qha/error.hpp"

namespace qha {

using json = nlohmann::ordered_json;

namespace {

FieldSpec parse_field(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return {};
    throw ParseError("field must be \"Q\" or {\"Fp\": p}");
  }
  if (j.is_object() && j.contains("Fp")) {
    auto p = j.at("Fp");
    if (!p.is_number_unsigned() || p.get<std::uint64_t>() >= (1ULL << 31))
      throw ParseError("Fp characteristic must be a prime below 2^31");
    FieldSpec f{(std::uint32_t)p.get<std::uint64_t>()};
    if (!is_prime(f.p))
      throw ParseError("Fp characteristic " + std::to_string(f.p) + " is not prime");
    return f;
  }
  throw ParseError("field must be \"Q\" or {\"Fp\": p}");
}

}  // namespace

AlgebraDocument parse_algebra(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("syntax error: ") + e.what());
  }
  try {
    AlgebraDocument doc;
    doc.field = j.contains("field") ? parse_field(j.at("field")) : FieldSpec{};
    for (const auto& v : j.at("vertices"))
      doc.quiver.vertices.push_back(v.get<std::string>());
    for (const auto& a : j.at("arrows")) {
      Arrow ar;
      ar.label = a.at("label").get<std::string>();
      ar.source = doc.quiver.vertex_index(a.at("source").get<std::string>());
      ar.target = doc.quiver.vertex_index(a.at("target").get<std::string>());
      doc.quiver.arrows.push_back(std::move(ar));
    }
    doc.quiver.check();
    if (j.contains("relations"))
      for (const auto& r : j.at("relations")) {
        Relation rel;
        for (const auto& t : r) {
          Scalar c = Scalar::parse(t.at("coeff").get<std::string>(), doc.field);
          std::vector<int> arrows;
          for (const auto& lab : t.at("path"))
            arrows.push_back(doc.quiver.arrow_index(lab.get<std::string>()));
          if (arrows.empty())
            throw ValidationError("relation term with empty path");
          rel.terms.emplace_back(std::move(c), PathWord::of(doc.quiver, arrows));
        }
        rel.check(doc.quiver);
        doc.relations.push_back(std::move(rel));
      }
    return doc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

std::string document_to_json(const AlgebraDocument& doc) {
  json j;
  if (doc.field.is_rational())
    j["field"] = "Q";
  else
    j["field"] = json{{"Fp", doc.field.p}};
  j["vertices"] = doc.quiver.vertices;
  j["arrows"] = json::array();
  for (const Arrow& a : doc.quiver.arrows)
    j["arrows"].push_back(json{{"label", a.label},
                               {"source", doc.quiver.vertices[a.source]},
                               {"target", doc.quiver.vertices[a.target]}});
  j["relations"] = json::array();
  for (const Relation& r : doc.relations) {
    json terms = json::array();
    for (const auto& [c, p] : r.terms) {
      json labels = json::array();
      for (int ai : p.arrows) labels.push_back(doc.quiver.arrows[ai].label);
      terms.push_back(json{{"coeff", c.str()}, {"path", labels}});
    }
    j["relations"].push_back(std::move(terms));
  }
  return j.dump(2) + "\n";
}

std::unique_ptr<const Algebra> build_document(const AlgebraDocument& doc,
                                              int max_path_length,
                                              const FieldSpec* field_override) {
  FieldSpec f = field_override ? *field_override : doc.field;
  return Algebra::build(doc.quiver, doc.relations, f, max_path_length);
}

std::string rep_to_json(const Representation& m) {
  const Algebra& a = *m.algebra;
  json j;
  j["dims"] = json::object();
  for (int v = 0; v < a.num_vertices(); ++v)
    j["dims"][a.quiver().vertices[v]] = m.dims[v];
  j["arrows"] = json::object();
  for (int ai = 0; ai < a.num_arrows(); ++ai) {
    json rows = json::array();
    for (int r = 0; r < m.mats[ai].rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < m.mats[ai].cols(); ++c)
        row.push_back(m.mats[ai].at(r, c).str());
      rows.push_back(std::move(row));
    }
    j["arrows"][a.quiver().arrows[ai].label] = std::move(rows);
  }
  return j.dump(2) + "\n";
}

Representation rep_from_json(const Algebra& a, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("syntax error in representation: ") + e.what());
  }
  try {
    Representation m;
    m.algebra = &a;
    m.dims.assign(a.num_vertices(), 0);
    for (const auto& [label, n] : j.at("dims").items())
      m.dims[a.quiver().vertex_index(label)] = n.get<int>();
    for (int ai = 0; ai < a.num_arrows(); ++ai) {
      const Arrow& ar = a.quiver().arrows[ai];
      Matrix mat(m.dims[ar.target], m.dims[ar.source]);
      if (j.at("arrows").contains(ar.label)) {
        const json& rows = j.at("arrows").at(ar.label);
        if ((int)rows.size() != mat.rows())
          throw ValidationError("arrow matrix '" + ar.label + "' has wrong shape");
        for (int r = 0; r < mat.rows(); ++r) {
          if ((int)rows[r].size() != mat.cols())
            throw ValidationError("arrow matrix '" + ar.label + "' has wrong shape");
          for (int c = 0; c < mat.cols(); ++c)
            mat.at(r, c) = Scalar::parse(rows[r][c].get<std::string>(), a.field());
        }
      }
      m.mats.push_back(std::move(mat));
    }
    if (!relations_vanish(m))
      throw ValidationError("representation does not satisfy the relations");
    return m;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed representation: ") + e.what());
  }
}

}  // namespace qha
