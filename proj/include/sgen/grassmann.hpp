#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgen/rational.hpp"
#include "sgen/superalgebra.hpp"

namespace sgen {

/// Element of the Grassmann algebra Lambda(n); coefficient per monomial,
/// indexed by bitmask (bit i-1 = generator xi_i).
struct Poly {
  int n = 0;
  Vec c;  // size 2^n

  static Poly zero(int n) { return {n, Vec(std::size_t(1) << n)}; }
  static Poly monomial(int n, std::uint32_t mask, Rat coeff = 1);

  bool is_zero() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
};

/// Product with xi_i xi_j = -xi_j xi_i, xi_i^2 = 0.
Poly gmul(const Poly& a, const Poly& b);

/// Left partial derivative d/dxi_i (1-based i).
Poly dxi(const Poly& f, int i);

std::string monomial_label(std::uint32_t mask);  // "x1x3"

/// Superderivation sum_i f_i d/dxi_i of Lambda(n).
struct Deriv {
  int n = 0;
  std::vector<Poly> f;  // f[i-1] = coefficient of d/dxi_i

  static Deriv zero(int n);
  /// x^u d/dxi_i
  static Deriv term(int n, std::uint32_t mask, int i, Rat coeff = 1);

  bool is_zero() const;
  /// -1 when zero or inhomogeneous, else 0/1.
  int parity() const;
  Deriv operator+(const Deriv& o) const;
  Deriv operator*(const Rat& s) const;
};

Poly apply_derivation(const Deriv& d, const Poly& f);

/// Superbracket [d,e] = de - (-1)^{p(d)p(e)} ed, computed on generator images.
Deriv deriv_bracket(const Deriv& a, const Deriv& b);

/// D_ij(f) = d_i(f) d_j + d_j(f) d_i
Deriv d_ij(int n, int i, int j, std::uint32_t mask);

/// Index involution used by D_H: i' = i + floor(n/2) for i <= floor(n/2),
/// with n' = n when n is odd.
int h_involution(int n, int i);

/// D_H(x^u) = (-1)^{|u|} sum_i d_i(x^u) d_{i'}
Deriv d_H(int n, std::uint32_t mask);

/// Coordinates of a derivation in the standard W(n) basis order
/// (layers k = -1..n-1; within a layer masks ascending, direction ascending).
Vec w_coords(const Deriv& d);

/// The (mask, direction) pairs of the standard W(n) basis, in order.
std::vector<std::pair<std::uint32_t, int>> w_basis_order(int n);

}  // namespace sgen
