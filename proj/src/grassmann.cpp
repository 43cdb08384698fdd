#include "sgen/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace sgen {

Poly Poly::monomial(int n, std::uint32_t mask, Rat coeff) {
  Poly p = zero(n);
  p.c[mask] = std::move(coeff);
  return p;
}

bool Poly::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; });
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
  return r;
}

namespace {

/// Sign of sorting the concatenation x^a x^b into ascending order;
/// 0 when the masks overlap.
int merge_sign(std::uint32_t a, std::uint32_t b) {
  if (a & b) return 0;
  int inv = 0;
  for (std::uint32_t bit = a; bit; bit &= bit - 1) {
    std::uint32_t i = std::countr_zero(bit);
    inv += std::popcount(b & ((1u << i) - 1));
  }
  return inv % 2 ? -1 : 1;
}

}  // namespace

Poly gmul(const Poly& a, const Poly& b) {
  Poly r = Poly::zero(a.n);
  for (std::uint32_t u = 0; u < a.c.size(); ++u) {
    if (a.c[u] == 0) continue;
    for (std::uint32_t v = 0; v < b.c.size(); ++v) {
      if (b.c[v] == 0) continue;
      int s = merge_sign(u, v);
      if (s) r.c[u | v] += s * a.c[u] * b.c[v];
    }
  }
  return r;
}

Poly dxi(const Poly& f, int i) {
  Poly r = Poly::zero(f.n);
  std::uint32_t bit = 1u << (i - 1);
  for (std::uint32_t u = 0; u < f.c.size(); ++u) {
    if (f.c[u] == 0 || !(u & bit)) continue;
    int pos = std::popcount(u & (bit - 1));  // generators left of xi_i
    Rat v = f.c[u];
    if (pos % 2) v = -v;
    r.c[u & ~bit] += v;
  }
  return r;
}

std::string monomial_label(std::uint32_t mask) {
  std::ostringstream os;
  for (std::uint32_t bit = mask; bit; bit &= bit - 1)
    os << "x" << (std::countr_zero(bit) + 1);
  return os.str();
}

Deriv Deriv::zero(int n) {
  Deriv d;
  d.n = n;
  d.f.assign(n, Poly::zero(n));
  return d;
}

Deriv Deriv::term(int n, std::uint32_t mask, int i, Rat coeff) {
  Deriv d = zero(n);
  d.f[i - 1].c[mask] = std::move(coeff);
  return d;
}

bool Deriv::is_zero() const {
  return std::all_of(f.begin(), f.end(), [](const Poly& p) { return p.is_zero(); });
}

int Deriv::parity() const {
  int p = -1;
  for (const auto& fi : f) {
    for (std::uint32_t u = 0; u < fi.c.size(); ++u) {
      if (fi.c[u] == 0) continue;
      int q = (std::popcount(u) + 1) % 2;
      if (p == -1) p = q;
      else if (p != q) return -1;
    }
  }
  return p;
}

Deriv Deriv::operator+(const Deriv& o) const {
  Deriv r = *this;
  for (int i = 0; i < n; ++i) r.f[i] = r.f[i] + o.f[i];
  return r;
}

Deriv Deriv::operator*(const Rat& s) const {
  Deriv r = *this;
  for (auto& fi : r.f)
    for (auto& c : fi.c) c *= s;
  return r;
}

Poly apply_derivation(const Deriv& d, const Poly& f) {
  Poly r = Poly::zero(d.n);
  for (int i = 1; i <= d.n; ++i) {
    if (d.f[i - 1].is_zero()) continue;
    r = r + gmul(d.f[i - 1], dxi(f, i));
  }
  return r;
}

Deriv deriv_bracket(const Deriv& a, const Deriv& b) {
  int pa = a.parity(), pb = b.parity();
  if (pa < 0 || pb < 0) throw usage_error("deriv_bracket: inhomogeneous input");
  int sgn = (pa && pb) ? 1 : -1;
  Deriv r = Deriv::zero(a.n);
  for (int i = 0; i < a.n; ++i) {
    Poly t = apply_derivation(a, b.f[i]);
    Poly s = apply_derivation(b, a.f[i]);
    for (std::size_t u = 0; u < t.c.size(); ++u)
      r.f[i].c[u] = t.c[u] + sgn * s.c[u];
  }
  return r;
}

Deriv d_ij(int n, int i, int j, std::uint32_t mask) {
  Poly f = Poly::monomial(n, mask);
  Deriv d = Deriv::zero(n);
  d.f[j - 1] = d.f[j - 1] + dxi(f, i);
  d.f[i - 1] = d.f[i - 1] + dxi(f, j);
  return d;
}

int h_involution(int n, int i) {
  int m = n / 2;
  if (n % 2 == 1 && i == n) return n;
  return i <= m ? i + m : i - m;
}

Deriv d_H(int n, std::uint32_t mask) {
  Poly f = Poly::monomial(n, mask);
  int deg = std::popcount(mask);
  Rat sgn = (deg % 2) ? -1 : 1;
  Deriv d = Deriv::zero(n);
  for (int i = 1; i <= n; ++i) {
    Poly g = dxi(f, i);
    int ip = h_involution(n, i);
    for (std::uint32_t u = 0; u < g.c.size(); ++u)
      d.f[ip - 1].c[u] += sgn * g.c[u];
  }
  return d;
}

std::vector<std::pair<std::uint32_t, int>> w_basis_order(int n) {
  std::vector<std::pair<std::uint32_t, int>> out;
  for (int k = -1; k <= n - 1; ++k) {
    for (std::uint32_t u = 0; u < (1u << n); ++u) {
      if (std::popcount(u) != k + 1) continue;
      for (int i = 1; i <= n; ++i) out.emplace_back(u, i);
    }
  }
  return out;
}

Vec w_coords(const Deriv& d) {
  auto order = w_basis_order(d.n);
  Vec v(order.size());
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    auto [u, i] = order[idx];
    v[idx] = d.f[i - 1].c[u];
  }
  return v;
}

}  // namespace sgen
