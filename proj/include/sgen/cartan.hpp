#pragma once

#include "sgen/family_types.hpp"
#include "sgen/grassmann.hpp"

namespace sgen {

/// W(n) = der Lambda(n), n >= 3.
BuiltFamily build_W(int n);

/// S(n), n >= 4: span of D_ij(x^u).
BuiltFamily build_S(int n);

/// S~(2m), m >= 2: S(2m) with the degree -1 layer replaced by
/// (1 + xi_1...xi_2m) d/dxi_j. Not Z-graded.
BuiltFamily build_S_tilde(int twom);

/// H(n), n >= 5: span of D_H(x^u).
BuiltFamily build_H(int n);

/// Ranks of the defining spanning sets, computed independently of the
/// builders' structure tables.
std::size_t w_span_rank(int n);
std::size_t s_span_rank(int n);
std::size_t h_span_rank(int n);

}  // namespace sgen
