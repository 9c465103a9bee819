#pragma once
#include <string>

#include "qha/algebra.hpp"
#include "qha/rep.hpp"

namespace qha {

// The validated content of an algebra description file.
struct AlgebraDocument {
  Quiver quiver;
  std::vector<Relation> relations;
  FieldSpec field;
};

// Input format: JSON object with keys "field" ("Q" or {"Fp": p}),
// "vertices", "arrows", "relations"; see README for the grammar.
AlgebraDocument parse_algebra(const std::string& text);
std::string document_to_json(const AlgebraDocument& doc);

std::unique_ptr<const Algebra> build_document(const AlgebraDocument& doc,
                                              int max_path_length = 64,
                                              const FieldSpec* field_override = nullptr);

// {"dims": {vertex: n}, "arrows": {label: [[entries as strings, row-major]]}}
// Arrow matrices are (target dim) x (source dim).
std::string rep_to_json(const Representation& m);
Representation rep_from_json(const Algebra& a, const std::string& text);

}  // namespace qha
