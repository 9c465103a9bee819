#pragma once
#include "qha/parse.hpp"

namespace qha {
namespace fixtures {

// The in-repo fixture library used throughout the tests and the docs.
AlgebraDocument k();                 // one vertex, no arrows
AlgebraDocument a2();                // 1 -> 2
AlgebraDocument nr(int r);           // one loop x, relation x^r
AlgebraDocument kronecker();         // Beilinson n=1: two parallel arrows
AlgebraDocument beilinson2();        // Beilinson n=2
AlgebraDocument e41(int m, int n);   // the two-parameter cyclic quiver family

// Lookup by name used by the CLI: K, A2, Nr, KR, B2, E41.
AlgebraDocument by_name(const std::string& name, int r, int m, int n);

}  // namespace fixtures
}  // namespace qha
