#include "sgen/cartan.hpp"

#include <bit>
#include <sstream>

namespace sgen {

namespace {

struct CartanBasis {
  std::vector<Deriv> derivs;
  std::vector<std::string> labels;
  std::vector<int> z_degree;
};

/// Builds the structure table of a family given by explicit derivations.
std::shared_ptr<SuperAlgebra> table_from_derivs(const CartanBasis& b,
                                                const std::string& name,
                                                bool graded) {
  std::vector<Vec> rows;
  std::vector<int> parity;
  for (const auto& d : b.derivs) {
    int p = d.parity();
    if (p < 0) throw usage_error(name + ": inhomogeneous basis derivation");
    parity.push_back(p);
    rows.push_back(w_coords(d));
  }
  SpanSolver solver(rows, rows.front().size());
  auto alg = std::make_shared<SuperAlgebra>(name, b.labels, parity);
  alg->set_z_degree(b.z_degree, graded);
  for (std::size_t i = 0; i < b.derivs.size(); ++i) {
    for (std::size_t j = i; j < b.derivs.size(); ++j) {
      Deriv br = deriv_bracket(b.derivs[i], b.derivs[j]);
      auto coeffs = solver.express(w_coords(br));
      if (!coeffs)
        throw usage_error(name + ": span not bracket-closed at (" + b.labels[i] +
                          "," + b.labels[j] + ")");
      SparseVec sv;
      for (std::size_t k = 0; k < coeffs->size(); ++k)
        if ((*coeffs)[k] != 0) sv.emplace_back(k, (*coeffs)[k]);
      alg->set_entry(i, j, std::move(sv));
    }
  }
  return alg;
}

void set_cartan_from_derivs(SuperAlgebra& alg, const CartanBasis& b,
                            const std::vector<Deriv>& frame,
                            const std::vector<std::string>& frame_labels) {
  std::vector<Vec> rows;
  for (const auto& d : b.derivs) rows.push_back(w_coords(d));
  SpanSolver solver(rows, rows.front().size());
  std::vector<Vec> coords;
  for (const auto& h : frame) {
    auto c = solver.express(w_coords(h));
    if (!c) throw usage_error("cartan frame element outside the algebra");
    coords.push_back(*c);
  }
  alg.set_cartan(std::move(coords), frame_labels);
}

Deriv xi_di(int n, int i) { return Deriv::term(n, 1u << (i - 1), i); }

std::string w_label(std::uint32_t mask, int i) {
  std::ostringstream os;
  os << monomial_label(mask) << "D" << i;
  return os.str();
}

}  // namespace

BuiltFamily build_W(int n) {
  if (n < 3) throw usage_error("W(n): n >= 3 required");
  CartanBasis b;
  for (auto [u, i] : w_basis_order(n)) {
    b.derivs.push_back(Deriv::term(n, u, i));
    b.labels.push_back(w_label(u, i));
    b.z_degree.push_back(std::popcount(u) - 1);
  }
  BuiltFamily f;
  f.id = {Kind::W, {n}};
  f.alg = table_from_derivs(b, f.id.display(), true);
  std::vector<Deriv> frame;
  std::vector<std::string> flabels;
  for (int i = 1; i <= n; ++i) {
    frame.push_back(xi_di(n, i));
    flabels.push_back(w_label(1u << (i - 1), i));
  }
  set_cartan_from_derivs(*f.alg, b, frame, flabels);
  return f;
}

namespace {

/// Greedy rank filter over a layer's spanning candidates.
void add_independent(CartanBasis& b, Subspace& span, const Deriv& d,
                     const std::string& label, int degree) {
  if (d.is_zero()) return;
  if (!span.insert(w_coords(d))) return;
  b.derivs.push_back(d);
  b.labels.push_back(label);
  b.z_degree.push_back(degree);
}

std::string dij_label(int i, int j, std::uint32_t mask) {
  std::ostringstream os;
  os << "D" << i << j << "(" << monomial_label(mask) << ")";
  return os.str();
}

CartanBasis s_layers(int n, int from_degree) {
  CartanBasis b;
  Subspace span(std::size_t(n) << n);
  for (int k = from_degree; k <= n - 2; ++k) {
    for (std::uint32_t u = 0; u < (1u << n); ++u) {
      if (std::popcount(u) != k + 2) continue;
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
          add_independent(b, span, d_ij(n, i, j, u), dij_label(i, j, u), k);
    }
  }
  return b;
}

std::vector<Deriv> s_frame(int n, std::vector<std::string>& labels) {
  std::vector<Deriv> frame;
  for (int j = 2; j <= n; ++j) {
    frame.push_back(xi_di(n, 1) + xi_di(n, j) * Rat(-1));
    labels.push_back("x1D1-x" + std::to_string(j) + "D" + std::to_string(j));
  }
  return frame;
}

}  // namespace

BuiltFamily build_S(int n) {
  if (n < 4) throw usage_error("S(n): n >= 4 required");
  CartanBasis b = s_layers(n, -1);
  BuiltFamily f;
  f.id = {Kind::S, {n}};
  f.alg = table_from_derivs(b, f.id.display(), true);
  std::vector<std::string> flabels;
  auto frame = s_frame(n, flabels);
  set_cartan_from_derivs(*f.alg, b, frame, flabels);
  return f;
}

BuiltFamily build_S_tilde(int twom) {
  if (twom < 4 || twom % 2 != 0) throw usage_error("S~(2m): even n >= 4 required");
  int n = twom;
  std::uint32_t top = (1u << n) - 1;
  CartanBasis b;
  for (int j = 1; j <= n; ++j) {
    Deriv d = Deriv::zero(n);
    d.f[j - 1].c[0] = 1;
    d.f[j - 1].c[top] = 1;
    b.derivs.push_back(d);
    b.labels.push_back("(1+" + monomial_label(top) + ")D" + std::to_string(j));
    b.z_degree.push_back(-1);
  }
  CartanBasis rest = s_layers(n, 0);
  for (std::size_t i = 0; i < rest.derivs.size(); ++i) {
    b.derivs.push_back(rest.derivs[i]);
    b.labels.push_back(rest.labels[i]);
    b.z_degree.push_back(rest.z_degree[i]);
  }
  BuiltFamily f;
  f.id = {Kind::St, {n}};
  f.alg = table_from_derivs(b, f.id.display(), /*graded=*/false);
  std::vector<std::string> flabels;
  auto frame = s_frame(n, flabels);
  set_cartan_from_derivs(*f.alg, b, frame, flabels);
  return f;
}

BuiltFamily build_H(int n) {
  if (n < 5) throw usage_error("H(n): n >= 5 required");
  CartanBasis b;
  Subspace span(std::size_t(n) << n);
  for (int k = -1; k <= n - 3; ++k) {
    for (std::uint32_t u = 0; u < (1u << n); ++u) {
      if (std::popcount(u) != k + 2) continue;
      add_independent(b, span, d_H(n, u), "DH(" + monomial_label(u) + ")", k);
    }
  }
  BuiltFamily f;
  f.id = {Kind::H, {n}};
  f.alg = table_from_derivs(b, f.id.display(), true);
  int m = n / 2;
  std::vector<Deriv> frame;
  std::vector<std::string> flabels;
  for (int i = 1; i <= m; ++i) {
    int ip = h_involution(n, i);
    frame.push_back(xi_di(n, i) + xi_di(n, ip) * Rat(-1));
    flabels.push_back("x" + std::to_string(i) + "D" + std::to_string(i) + "-x" +
                      std::to_string(ip) + "D" + std::to_string(ip));
  }
  set_cartan_from_derivs(*f.alg, b, frame, flabels);
  return f;
}

std::size_t w_span_rank(int n) {
  Subspace span(std::size_t(n) << n);
  for (auto [u, i] : w_basis_order(n)) span.insert(w_coords(Deriv::term(n, u, i)));
  return span.dim();
}

std::size_t s_span_rank(int n) {
  Subspace span(std::size_t(n) << n);
  for (std::uint32_t u = 0; u < (1u << n); ++u) {
    if (std::popcount(u) < 1) continue;
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        Deriv d = d_ij(n, i, j, u);
        if (!d.is_zero()) span.insert(w_coords(d));
      }
  }
  return span.dim();
}

std::size_t h_span_rank(int n) {
  Subspace span(std::size_t(n) << n);
  for (std::uint32_t u = 1; u < (1u << n); ++u) {
    if (std::popcount(u) > n - 1) continue;
    Deriv d = d_H(n, u);
    if (!d.is_zero()) span.insert(w_coords(d));
  }
  return span.dim();
}

}  // namespace sgen
