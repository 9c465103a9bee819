#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qha/bounds.hpp"
#include "qha/error.hpp"
#include "qha/fixtures.hpp"
#include "qha/parse.hpp"
#include "qha/relative.hpp"

using json = nlohmann::ordered_json;
using namespace qha;

namespace {

struct Options {
  std::string input;
  int cutoff = 50;
  int max_path_length = 64;
  std::string field_override;
  std::string v_list = "\x01unset";
  bool json_out = false;
  std::uint64_t seed = 0;
  int parallel = 1;
  long long subset_cap = 65536;
  std::string simple_label;
  std::string module_spec;
  int steps = -1;
  std::string x_file;
  bool assert_resolving = false;
  bool assert_coresolving = false;
  long long external_extdim = -9999;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::unique_ptr<const Algebra> load_algebra(const Options& opt) {
  AlgebraDocument doc = parse_algebra(slurp(opt.input));
  FieldSpec override_spec;
  const FieldSpec* override_ptr = nullptr;
  if (!opt.field_override.empty()) {
    if (opt.field_override == "Q") {
      override_ptr = &override_spec;
    } else {
      try {
        override_spec.p = (std::uint32_t)std::stoul(opt.field_override);
      } catch (...) {
        throw ParseError("--field expects Q or a prime number");
      }
      override_ptr = &override_spec;
    }
  }
  return build_document(doc, opt.max_path_length, override_ptr);
}

std::vector<std::string> split_labels(const std::string& list) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : list) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!isspace((unsigned char)ch)) {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

SimpleSubset subset_from_option(const Algebra& a, const Options& opt) {
  if (opt.v_list == "\x01unset")
    throw ParseError("--v is required (use --v \"\" for the empty set)");
  return SimpleSubset::from_labels(a, split_labels(opt.v_list));
}

Representation module_from_spec(const Algebra& a, const std::string& spec) {
  if (spec.size() > 2 && spec[1] == ':') {
    std::string label = spec.substr(2);
    int v = a.quiver().vertex_index(label);
    switch (spec[0]) {
      case 'P':
        return projective(a, v);
      case 'S':
        return simple(a, v);
      case 'I':
        return injective(a, v);
      default:
        break;
    }
  }
  return rep_from_json(a, slurp(spec));
}

json dimvec_json(const Algebra& a, const DimVector& d) {
  json j = json::object();
  for (int v = 0; v < a.num_vertices(); ++v)
    j[a.quiver().vertices[v]] = d.d[v];
  return j;
}

int cmd_validate(const Options& opt) {
  auto a = load_algebra(opt);
  std::cout << "ok: dim " << a->dim() << ", LL " << a->loewy_length() << "\n";
  return 0;
}

int cmd_info(const Options& opt) {
  auto a = load_algebra(opt);
  HomDim gl = global_dimension(*a, opt.cutoff, opt.seed);
  if (opt.json_out) {
    json j;
    j["dim"] = a->dim();
    j["loewy_length"] = a->loewy_length();
    json layers = json::array();
    for (const auto& l : a->layers()) layers.push_back(l.size());
    j["basis_per_degree"] = layers;
    j["projectives"] = json::object();
    j["injectives"] = json::object();
    for (int v = 0; v < a->num_vertices(); ++v) {
      j["projectives"][a->quiver().vertices[v]] =
          dimvec_json(*a, projective(*a, v).dim_vector());
      j["injectives"][a->quiver().vertices[v]] =
          dimvec_json(*a, injective(*a, v).dim_vector());
    }
    j["gldim"] = gl.str();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "dim " << a->dim() << "\n";
  std::cout << "LL " << a->loewy_length() << "\n";
  std::cout << "basis per degree:";
  for (const auto& l : a->layers()) std::cout << " " << l.size();
  std::cout << "\n";
  for (int v = 0; v < a->num_vertices(); ++v)
    std::cout << "P(" << a->quiver().vertices[v] << ") "
              << projective(*a, v).dim_vector().str() << "\n";
  for (int v = 0; v < a->num_vertices(); ++v)
    std::cout << "I(" << a->quiver().vertices[v] << ") "
              << injective(*a, v).dim_vector().str() << "\n";
  std::cout << "gldim " << gl.str() << "\n";
  return 0;
}

int cmd_resolve(const Options& opt) {
  auto a = load_algebra(opt);
  if (opt.simple_label.empty() && opt.module_spec.empty())
    throw ParseError("pass --simple LABEL or --module SPEC");
  Representation m = opt.simple_label.empty()
                         ? module_from_spec(*a, opt.module_spec)
                         : simple(*a, a->quiver().vertex_index(opt.simple_label));
  int steps = opt.steps > 0 ? opt.steps : opt.cutoff;
  ResolutionTrace tr = resolve_trace(m, steps, opt.seed);
  if (opt.json_out) {
    json arr = json::array();
    for (size_t i = 0; i < tr.steps.size(); ++i) {
      json rec;
      rec["step"] = i + 1;
      rec["top_multiplicities"] = dimvec_json(*a, tr.steps[i].top_multiplicity);
      rec["syzygy_dims"] = dimvec_json(*a, tr.steps[i].syzygy_dims);
      if (i + 1 == tr.steps.size() && tr.periodicity)
        rec["periodicity"] = {tr.periodicity->first, tr.periodicity->second};
      arr.push_back(std::move(rec));
    }
    std::cout << arr.dump(2) << "\n";
    return 0;
  }
  for (size_t i = 0; i < tr.steps.size(); ++i) {
    std::cout << "step " << (i + 1) << ": cover multiplicities "
              << tr.steps[i].top_multiplicity.str() << ", syzygy dims "
              << tr.steps[i].syzygy_dims.str() << " (total "
              << tr.steps[i].syzygy_dims.total() << ")\n";
  }
  if (tr.periodicity)
    std::cout << "periodic: syzygy " << tr.periodicity->second
              << " isomorphic to syzygy " << tr.periodicity->first << "\n";
  else if (!tr.steps.empty() && tr.steps.back().syzygy_dims.total() == 0)
    std::cout << "resolution terminates (pd = "
              << (int)tr.steps.size() - 1 << ")\n";
  return 0;
}

int cmd_layer(const Options& opt) {
  auto a = load_algebra(opt);
  SimpleSubset v = subset_from_option(*a, opt);
  if (opt.module_spec.empty()) throw ParseError("--module is required");
  Representation m = module_from_spec(*a, opt.module_spec);
  auto [ll, trace] = layer_length(v, m);
  if (opt.json_out) {
    json j;
    j["V"] = json::array();
    for (int u : v.vertices) j["V"].push_back(a->quiver().vertices[u]);
    j["rows"] = json::array();
    for (size_t i = 0; i < trace.rows.size(); ++i)
      j["rows"].push_back(json{{"i", i},
                               {"torsion_dim", trace.rows[i].torsion_dim},
                               {"next_dim", trace.rows[i].next_dim}});
    j["layer_length"] = ll;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "i  dim t_V(F^i)  dim F^(i+1)\n";
  for (size_t i = 0; i < trace.rows.size(); ++i)
    std::cout << i << "  " << trace.rows[i].torsion_dim << "  "
              << trace.rows[i].next_dim << "\n";
  std::cout << "layer length = " << ll << "\n";
  return 0;
}

int cmd_bounds(const Options& opt) {
  auto a = load_algebra(opt);
  SimpleSubset v = subset_from_option(*a, opt);
  BoundReport report = bounds_for(*a, v, opt.cutoff, opt.seed);
  std::optional<long long> ext;
  if (opt.external_extdim != -9999) ext = opt.external_extdim;
  ChainNote note = chain_check(report.rows.front(), ext);
  if (opt.json_out) {
    json j = json::parse(report_json(*a, report));
    j["chain"] = json{{"holds", note.holds}, {"note", note.note}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << report_table(*a, report);
  std::cout << "chain: " << note.note << "\n";
  return 0;
}

int cmd_search(const Options& opt) {
  auto a = load_algebra(opt);
  BoundReport report =
      search_bounds(*a, opt.cutoff, opt.subset_cap, opt.seed, opt.parallel);
  if (opt.json_out)
    std::cout << report_json(*a, report);
  else
    std::cout << report_table(*a, report);
  return 0;
}

int cmd_relative_bounds(const Options& opt) {
  auto a = load_algebra(opt);
  SimpleSubset v = subset_from_option(*a, opt);
  if (opt.x_file.empty()) throw ParseError("--x-file is required");
  json spec;
  try {
    spec = json::parse(slurp(opt.x_file));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("bad generator file: ") + e.what());
  }
  std::vector<Representation> gens;
  if (!spec.contains("generators") || !spec["generators"].is_array())
    throw ParseError("generator file needs a \"generators\" array");
  for (const auto& g : spec["generators"]) {
    if (g.is_string())
      gens.push_back(module_from_spec(*a, g.get<std::string>()));
    else
      gens.push_back(rep_from_json(*a, g.dump()));
  }
  FiniteSubcategory x = make_subcategory(*a, std::move(gens),
                                         opt.assert_resolving,
                                         opt.assert_coresolving, opt.seed);
  json j;
  j["contains_all_projectives"] = x.contains_all_projectives;
  j["contains_all_injectives"] = x.contains_all_injectives;
  j["asserted_resolving"] = x.asserted_resolving;
  j["asserted_coresolving"] = x.asserted_coresolving;
  std::vector<std::string> lines;
  if (x.asserted_resolving) {
    RelativeBound rb = relative_bound(x, v, opt.cutoff, opt.seed);
    j["pd_side"] = json{{"pd_X_V", rb.class_dim.str()},
                        {"layer_length", rb.layer_length},
                        {"extdim_bound", rb.known ? json(rb.bound) : json("unknown")}};
    lines.push_back("pd_X V = " + rb.class_dim.str() + ", ll^tV = " +
                    std::to_string(rb.layer_length) + ", extdim <= " +
                    (rb.known ? std::to_string(rb.bound) : "unknown"));
  }
  if (x.asserted_coresolving) {
    RelativeBound rb = relative_bound_injective(x, v, opt.cutoff, opt.seed);
    j["id_side"] = json{{"id_X_V", rb.class_dim.str()},
                        {"layer_length", rb.layer_length},
                        {"extdim_bound", rb.known ? json(rb.bound) : json("unknown")}};
    lines.push_back("id_X V = " + rb.class_dim.str() + ", ll^tV = " +
                    std::to_string(rb.layer_length) + ", extdim <= " +
                    (rb.known ? std::to_string(rb.bound) : "unknown"));
  }
  if (!x.asserted_resolving && !x.asserted_coresolving)
    throw ParseError(
        "pass --assert-resolving and/or --assert-coresolving (closure under "
        "extensions/kernels is your assertion)");
  if (opt.json_out) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "resolving asserted: " << (x.asserted_resolving ? "yes" : "no")
              << ", projective coverage verified: "
              << (x.contains_all_projectives ? "yes" : "no") << "\n";
    std::cout << "coresolving asserted: "
              << (x.asserted_coresolving ? "yes" : "no")
              << ", injective coverage verified: "
              << (x.contains_all_injectives ? "yes" : "no") << "\n";
    for (const auto& l : lines) std::cout << l << "\n";
  }
  return 0;
}

int cmd_fixture(const std::string& name, int r, int m, int n,
                const std::string& out_path) {
  AlgebraDocument doc = fixtures::by_name(name, r, m, n);
  std::string text = document_to_json(doc);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write '" + out_path + "'");
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quiverhom: homological invariants and dimension bounds for "
               "bound quiver algebras"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input)
      cmd->add_option("input", opt.input, "algebra description file")->required();
    cmd->add_option("--cutoff", opt.cutoff, "resolution cutoff (default 50)");
    cmd->add_option("--max-path-length", opt.max_path_length,
                    "basis length guard (default 64)");
    cmd->add_option("--field", opt.field_override,
                    "override the input field: Q or a prime p");
    cmd->add_flag("--json", opt.json_out, "machine-readable output");
    cmd->add_option("--seed", opt.seed, "seed for randomized isomorphism tests");
  };

  auto* validate = app.add_subcommand("validate", "parse and build the algebra");
  add_common(validate, true);

  auto* info = app.add_subcommand("info", "dimensions, Loewy length, gldim");
  add_common(info, true);

  auto* resolve = app.add_subcommand("resolve", "minimal projective resolution trace");
  add_common(resolve, true);
  resolve->add_option("--simple", opt.simple_label, "resolve the simple at this vertex");
  resolve->add_option("--module", opt.module_spec, "P:v | S:v | I:v | rep file");
  resolve->add_option("--steps", opt.steps, "number of resolution steps");

  auto* layer = app.add_subcommand("layer", "torsion radical layer trace");
  add_common(layer, true);
  layer->add_option("--v", opt.v_list, "comma-separated vertex labels ('' = empty)");
  layer->add_option("--module", opt.module_spec, "P:v | S:v | I:v | rep file");

  auto* bounds = app.add_subcommand("bounds", "extdim/derdim bounds for one V");
  add_common(bounds, true);
  bounds->add_option("--v", opt.v_list, "comma-separated vertex labels ('' = empty)");
  bounds->add_option("--extdim", opt.external_extdim,
                     "externally known extdim for the chain note");

  auto* search = app.add_subcommand("search", "bounds for every subset V");
  add_common(search, true);
  search->add_option("--subset-cap", opt.subset_cap, "largest allowed 2^|S|");
  search->add_option("--parallel", opt.parallel, "worker threads");

  auto* rel = app.add_subcommand("relative-bounds",
                                 "extension-dimension bound over a finite subcategory");
  add_common(rel, true);
  rel->add_option("--v", opt.v_list, "comma-separated vertex labels");
  rel->add_option("--x-file", opt.x_file, "JSON file with a generators array");
  rel->add_flag("--assert-resolving", opt.assert_resolving,
                "assert closure under extensions/kernels of epis");
  rel->add_flag("--assert-coresolving", opt.assert_coresolving,
                "assert closure under extensions/cokernels of monos");

  auto* fixture = app.add_subcommand("fixture", "write a fixture input file");
  std::string fixture_name, fixture_out;
  int fr = 2, fm = 4, fn = 1;
  fixture->add_option("name", fixture_name, "K | A2 | Nr | KR | B2 | E41")->required();
  fixture->add_option("--r", fr, "loop nilpotency for Nr");
  fixture->add_option("--m", fm, "parameter m for E41");
  fixture->add_option("--n", fn, "parameter n for E41");
  fixture->add_option("-o,--output", fixture_out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(opt);
    if (info->parsed()) return cmd_info(opt);
    if (resolve->parsed()) return cmd_resolve(opt);
    if (layer->parsed()) return cmd_layer(opt);
    if (bounds->parsed()) return cmd_bounds(opt);
    if (search->parsed()) return cmd_search(opt);
    if (rel->parsed()) return cmd_relative_bounds(opt);
    if (fixture->parsed()) return cmd_fixture(fixture_name, fr, fm, fn, fixture_out);
  } catch (const CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
