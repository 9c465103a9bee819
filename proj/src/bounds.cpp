#include "qha/bounds.hpp"

#include <atomic>
#include <thread>

#include <json.hpp>

#include "qha/error.hpp"

namespace qha {

HomDim class_dim_max(const std::vector<HomDim>& members) {
  if (members.empty()) return HomDim::finite(-1);
  bool any_atleast = false;
  int val = -1;
  for (const HomDim& d : members) {
    if (d.is_infinite()) return d;
    if (d.kind == HomDim::Kind::AtLeast) any_atleast = true;
    val = std::max(val, d.value);
  }
  return any_atleast ? HomDim::at_least(val) : HomDim::finite(val);
}

Cell min_class(const HomDim& pd_v, const HomDim& id_v) {
  if (pd_v.is_finite() && id_v.is_finite())
    return Cell::of(std::min(pd_v.value, id_v.value));
  if (pd_v.is_finite()) return Cell::of(pd_v.value);
  if (id_v.is_finite()) return Cell::of(id_v.value);
  return Cell::unknown();
}

PerSimpleCache simple_dimension_cache(const Algebra& a, int cutoff,
                                      std::uint64_t seed) {
  PerSimpleCache cache;
  for (int v = 0; v < a.num_vertices(); ++v) {
    Representation s = simple(a, v);
    cache.pd.push_back(projective_dimension(s, cutoff, seed + v));
    cache.id.push_back(injective_dimension(s, cutoff, seed + 31 * v + 7));
  }
  return cache;
}

namespace {

void fill_cells(BoundRow& row) {
  if (!row.d.known || row.n < 0) {
    row.extdim = Cell::unknown();
    row.derdim_new = Cell::unknown();
    row.derdim_old = Cell::unknown();
    row.branch = "unknown";
    return;
  }
  long long d = row.d.value, n = row.n;
  row.extdim = Cell::of(d + n);
  row.derdim_old = Cell::of((d + 2) * (n + 1) - 2);
  if (d >= 1 && n >= 2) {
    row.derdim_new = Cell::of(2 * (d + n) + 1);
    row.branch = "2(d+n)+1";
  } else {
    row.derdim_new = row.derdim_old;
    row.branch = "(d+2)(n+1)-2";
  }
}

}  // namespace

BoundRow evaluate_subset(const Algebra& a, const SimpleSubset& v,
                         const PerSimpleCache& cache) {
  BoundRow row;
  row.v = v;
  std::vector<HomDim> pds, ids;
  for (int u : v.vertices) {
    pds.push_back(cache.pd[u]);
    ids.push_back(cache.id[u]);
    if (!cache.pd[u].is_finite() && !cache.id[u].is_finite()) row.pruned = true;
  }
  row.pd_class = class_dim_max(pds);
  row.id_class = class_dim_max(ids);
  row.d = min_class(row.pd_class, row.id_class);
  if (!row.pruned) row.n = algebra_layer_length(v, a);
  fill_cells(row);
  return row;
}

BoundReport bounds_for(const Algebra& a, const SimpleSubset& v, int cutoff,
                       std::uint64_t seed) {
  PerSimpleCache cache = simple_dimension_cache(a, cutoff, seed);
  BoundReport report;
  report.loewy_length = a.loewy_length();
  report.gldim = class_dim_max(cache.pd);
  report.rows.push_back(evaluate_subset(a, v, cache));
  BoundRow& row = report.rows.back();
  row.strictly_below = row.derdim_new.known && row.derdim_old.known &&
                       row.derdim_new.value < row.derdim_old.value &&
                       row.derdim_new.value < report.loewy_length - 1;
  return report;
}

Cell extdim_bound(const Algebra& a, const SimpleSubset& v, int cutoff,
                  std::uint64_t seed) {
  return bounds_for(a, v, cutoff, seed).rows.front().extdim;
}

Cell derdim_bound(const Algebra& a, const SimpleSubset& v, int cutoff,
                  std::uint64_t seed) {
  return bounds_for(a, v, cutoff, seed).rows.front().derdim_new;
}

ChainNote chain_check(const BoundRow& row,
                      std::optional<long long> external_extdim) {
  ChainNote note;
  if (row.extdim.known && row.derdim_new.known) {
    note.holds = row.derdim_new.value <= 2 * row.extdim.value + 1;
    note.note = "derdim <= " + row.derdim_new.str() + " <= 2*" +
                row.extdim.str() + "+1 = " +
                std::to_string(2 * row.extdim.value + 1);
  } else {
    note.note = "chain comparison skipped (unknown cells)";
  }
  if (external_extdim) {
    long long e = *external_extdim;
    note.note += "; extdim = " + std::to_string(e) +
                 " (external) => derdim <= " + std::to_string(2 * e + 1);
  }
  return note;
}

BoundReport search_bounds(const Algebra& a, int cutoff, long long subset_cap,
                          std::uint64_t seed, int parallelism) {
  const int nv = a.num_vertices();
  if (nv >= 63 || (1LL << nv) > subset_cap)
    throw CapError("subset search over 2^" + std::to_string(nv) +
                   " sets exceeds the cap " + std::to_string(subset_cap) +
                   "; raise --subset-cap only if you mean it");
  PerSimpleCache cache = simple_dimension_cache(a, cutoff, seed);

  std::vector<std::vector<int>> subsets;
  for (long long mask = 0; mask < (1LL << nv); ++mask) {
    std::vector<int> verts;
    for (int u = 0; u < nv; ++u)
      if (mask & (1LL << u)) verts.push_back(u);
    subsets.push_back(std::move(verts));
  }
  std::sort(subsets.begin(), subsets.end(),
            [](const auto& x, const auto& y) {
              if (x.size() != y.size()) return x.size() < y.size();
              return x < y;
            });

  BoundReport report;
  report.loewy_length = a.loewy_length();
  report.gldim = class_dim_max(cache.pd);
  report.rows.resize(subsets.size());

  std::atomic<size_t> next{0};
  auto worker = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= subsets.size()) return;
      report.rows[i] =
          evaluate_subset(a, SimpleSubset{subsets[i]}, cache);
    }
  };
  int threads = std::max(1, parallelism);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  long long best_ext = -1, best_der = -1;
  for (const BoundRow& r : report.rows) {
    if (r.extdim.known && (best_ext < 0 || r.extdim.value < best_ext))
      best_ext = r.extdim.value;
    if (r.derdim_new.known && (best_der < 0 || r.derdim_new.value < best_der))
      best_der = r.derdim_new.value;
  }
  for (BoundRow& r : report.rows) {
    r.best_extdim = r.extdim.known && r.extdim.value == best_ext;
    r.best_derdim = r.derdim_new.known && r.derdim_new.value == best_der;
    r.strictly_below = r.derdim_new.known && r.derdim_old.known &&
                       r.derdim_new.value < r.derdim_old.value &&
                       r.derdim_new.value < report.loewy_length - 1;
  }
  return report;
}

namespace {

std::string cell_str(const Cell& c) { return c.str(); }

}  // namespace

std::string report_table(const Algebra& a, const BoundReport& report) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"V", "pdV", "idV", "d", "n", "extdim<=", "derdim<=(new)",
                  "derdim<=(old)", "flags"});
  for (const BoundRow& r : report.rows) {
    std::string flags;
    if (r.pruned) flags += "pruned ";
    if (r.best_extdim) flags += "best-ext ";
    if (r.best_derdim) flags += "best-der ";
    if (r.strictly_below) flags += "below-both ";
    if (!flags.empty()) flags.pop_back();
    rows.push_back({r.v.str(a), r.pd_class.str(), r.id_class.str(),
                    cell_str(r.d), r.n < 0 ? "-" : std::to_string(r.n),
                    cell_str(r.extdim), cell_str(r.derdim_new),
                    cell_str(r.derdim_old), flags});
  }
  std::vector<size_t> width(rows[0].size(), 0);
  for (const auto& row : rows)
    for (size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  std::string out = "LL = " + std::to_string(report.loewy_length) +
                    ", gldim = " + report.gldim.str() + "\n";
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      out += row[c];
      out += std::string(width[c] - row[c].size() + 2, ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += "\n";
  }
  return out;
}

std::string report_json(const Algebra& a, const BoundReport& report) {
  using json = nlohmann::ordered_json;
  auto cell = [](const Cell& c) -> json {
    if (c.known) return c.value;
    return "unknown";
  };
  auto verdict = [](const HomDim& d) -> json {
    json j;
    switch (d.kind) {
      case HomDim::Kind::Finite:
        j["kind"] = "finite";
        j["value"] = d.value;
        break;
      case HomDim::Kind::AtLeast:
        j["kind"] = "at_least";
        j["value"] = d.value;
        break;
      case HomDim::Kind::InfiniteCertified:
        j["kind"] = "infinite_certified";
        j["syzygy_i"] = d.cert_i;
        j["syzygy_j"] = d.cert_j;
        break;
    }
    return j;
  };
  json j;
  j["loewy_length"] = report.loewy_length;
  j["gldim"] = verdict(report.gldim);
  j["rows"] = json::array();
  for (const BoundRow& r : report.rows) {
    json row;
    json vlist = json::array();
    for (int u : r.v.vertices) vlist.push_back(a.quiver().vertices[u]);
    row["V"] = vlist;
    row["pdV"] = verdict(r.pd_class);
    row["idV"] = verdict(r.id_class);
    row["d"] = cell(r.d);
    if (r.n >= 0)
      row["n"] = r.n;
    else
      row["n"] = "skipped";
    row["extdim_bound"] = cell(r.extdim);
    row["derdim_bound"] = cell(r.derdim_new);
    row["derdim_bound_old"] = cell(r.derdim_old);
    row["branch"] = r.branch;
    row["pruned"] = r.pruned;
    row["best_extdim"] = r.best_extdim;
    row["best_derdim"] = r.best_derdim;
    row["strictly_below_comparators"] = r.strictly_below;
    j["rows"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

}  // namespace qha
