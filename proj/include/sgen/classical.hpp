#pragma once

#include "sgen/family_types.hpp"

namespace sgen {

/// gl(r|s): basis e_ij, diagonal blocks even, off-diagonal blocks odd.
std::shared_ptr<SuperAlgebra> build_gl(int r, int s);

std::string gl_label(int i, int j);

/// str(X) = tr(upper even block) - tr(lower even block); r|s are the block sizes.
Rat supertrace(const Element& x, int r, int s);

/// Supertrace-zero subalgebra of gl(r|s).
BuiltFamily build_sl(int r, int s, const std::string& name);

/// A(m,n) = sl(m+1|n+1); for m = n additionally the quotient by the center.
BuiltFamily build_A(int m, int n);

/// osp(M|2N) for the anti-diagonal symmetric / symplectic forms; covers
/// B(m,n) (M=2m+1), D(m,n) (M=2m), C(n) (M=2).
BuiltFamily build_osp(int M, int twoN, const FamilyId& id);

/// P(n): matrices (a b; c -a^T) with tr(a)=0, b symmetric, c skew.
BuiltFamily build_P(int n);

/// Q~(n): matrices (a b; b a) in sl(n+1|n+1) with tr(b)=0.
BuiltFamily build_Q_tilde(int n);

/// Q(n) = Q~(n)/F I_{2n+2}.
BuiltFamily build_Q(int n);

}  // namespace sgen
