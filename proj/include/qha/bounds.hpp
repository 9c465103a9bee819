#pragma once
#include <optional>

#include "qha/homology.hpp"
#include "qha/torsion.hpp"

namespace qha {

// A table cell: either a number or honestly unknown (derived from an
// AtLeast verdict or from min{inf, inf}).
struct Cell {
  bool known = false;
  long long value = 0;

  static Cell of(long long v) { return {true, v}; }
  static Cell unknown() { return {}; }
  std::string str() const { return known ? std::to_string(value) : "unknown"; }
};

// pd/id of a class of modules: max over members, Finite(-1) for the empty
// class.
HomDim class_dim_max(const std::vector<HomDim>& members);

// min{pd V, id V} under the soundness policy: a finite side wins (it upper
// bounds the min); otherwise the min is unknown.
Cell min_class(const HomDim& pd_v, const HomDim& id_v);

struct PerSimpleCache {
  std::vector<HomDim> pd;
  std::vector<HomDim> id;
};
PerSimpleCache simple_dimension_cache(const Algebra& a, int cutoff,
                                      std::uint64_t seed);

struct BoundRow {
  SimpleSubset v;
  HomDim pd_class = HomDim::finite(-1);
  HomDim id_class = HomDim::finite(-1);
  Cell d;            // min{pd V, id V}
  int n = -1;        // ll^{t_V}(Lambda); -1 when pruned
  Cell extdim;       // d + n
  Cell derdim_new;   // 2(d+n)+1 when d>=1 and n>=2, else (d+2)(n+1)-2
  Cell derdim_old;   // (d+2)(n+1)-2
  bool pruned = false;
  bool best_extdim = false;
  bool best_derdim = false;
  bool strictly_below = false;  // new < old and new < LL-1
  std::string branch;           // which derdim formula fired
};

struct BoundReport {
  int loewy_length = 0;
  HomDim gldim = HomDim::finite(0);
  std::vector<BoundRow> rows;
};

BoundRow evaluate_subset(const Algebra& a, const SimpleSubset& v,
                         const PerSimpleCache& cache);
// One-row report (plus the baselines) for a chosen V.
BoundReport bounds_for(const Algebra& a, const SimpleSubset& v, int cutoff,
                       std::uint64_t seed);
Cell extdim_bound(const Algebra& a, const SimpleSubset& v, int cutoff,
                  std::uint64_t seed);
Cell derdim_bound(const Algebra& a, const SimpleSubset& v, int cutoff,
                  std::uint64_t seed);

struct ChainNote {
  bool holds = true;       // derdim_new <= 2*extdim + 1 on this row
  std::string note;        // human-readable summary
};
ChainNote chain_check(const BoundRow& row,
                      std::optional<long long> external_extdim);

// Exhaustive subset table, ordered by (|V|, lex); rows containing a simple
// with both pd and id non-finite are pruned (kept, marked, layer length
// skipped). Deterministic for a fixed seed; evaluation may fan out over
// `parallelism` threads.
BoundReport search_bounds(const Algebra& a, int cutoff, long long subset_cap,
                          std::uint64_t seed, int parallelism = 1);

std::string report_table(const Algebra& a, const BoundReport& report);
std::string report_json(const Algebra& a, const BoundReport& report);

}  // namespace qha
