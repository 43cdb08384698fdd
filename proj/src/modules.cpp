#include "sgen/modules.hpp"

namespace sgen {

Subspace module_closure(const SuperAlgebra& a, const std::vector<Vec>& actors,
                        const std::vector<Vec>& seeds) {
  Subspace span(a.dim());
  for (const auto& s : seeds) span.insert(s);
  std::size_t processed = 0;
  while (processed < span.dim()) {
    // Rows past `processed` carry pivots unseen so far; brackets of already
    // processed rows with every actor are in the span by induction.
    std::vector<Vec> frontier(span.rows().begin() + processed, span.rows().end());
    processed = span.dim();
    for (const auto& act : actors) {
      Element x(a, act);
      for (const auto& row : frontier)
        span.insert(bracket(x, Element(a, row)).c);
    }
  }
  return span;
}

AdaptedModule adapt_to_weights(const SuperAlgebra& a, const CartanFrame& f,
                               const Subspace& module) {
  AdaptedModule out;
  for (const auto& ws : decompose(a, f)) {
    Subspace span(a.dim());
    for (std::size_t i : ws.members) span.insert(Element::basis(a, i).c);
    Subspace part = module.intersect(span);
    for (const auto& row : part.rows()) {
      out.rows.push_back(row);
      out.weights.push_back(ws.weight);
    }
  }
  if (out.rows.size() != module.dim())
    throw usage_error(a.name() +
                      ": module does not decompose into frame weight spaces");
  return out;
}

std::vector<Matrix> restricted_action(const SuperAlgebra& a,
                                      const std::vector<Vec>& actors,
                                      const AdaptedModule& m) {
  const std::size_t d = m.rows.size();
  SpanSolver solver(m.rows, a.dim());
  std::vector<Matrix> out;
  for (const auto& act : actors) {
    Matrix A(d, d);
    Element x(a, act);
    for (std::size_t j = 0; j < d; ++j) {
      auto c = solver.express(bracket(x, Element(a, m.rows[j])).c);
      if (!c)
        throw usage_error(a.name() + ": subspace is not an actor-module");
      for (std::size_t i = 0; i < d; ++i) A.at(i, j) = (*c)[i];
    }
    out.push_back(std::move(A));
  }
  return out;
}

namespace {

/// sqrt of a nonnegative rational when it is an exact square.
std::optional<Rat> rat_sqrt(const Rat& x) {
  if (x < 0) return std::nullopt;
  mpz_class num = x.get_num(), den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rat(rn) / Rat(rd);
}

Vec flatten_commutator(const Vec& b, const Matrix& A) {
  const std::size_t d = A.rows();
  Vec out(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Rat v = 0;
      for (std::size_t k = 0; k < d; ++k)
        v += b[i * d + k] * A.at(k, j) - A.at(i, k) * b[k * d + j];
      out[i * d + j] = std::move(v);
    }
  return out;
}

Subspace rows_to_subspace(const std::vector<Vec>& coeffs,
                          const std::vector<Vec>& rows, std::size_t ambient) {
  Subspace out(ambient);
  for (const auto& c : coeffs) {
    Vec v(ambient);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0)
        for (std::size_t k = 0; k < ambient; ++k) v[k] += c[i] * rows[i][k];
    out.insert(std::move(v));
  }
  return out;
}

}  // namespace

ModuleSplit analyze_module(const SuperAlgebra& a, const CartanFrame& f,
                           const std::vector<Vec>& actors,
                           const Subspace& module) {
  AdaptedModule am = adapt_to_weights(a, f, module);
  const std::size_t d = am.rows.size();
  auto action = restricted_action(a, actors, am);

  // Commutant basis, flattened d x d; start from the weight-diagonal block
  // positions (any commuting matrix preserves the frame weight spaces).
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (am.weights[i] == am.weights[j]) {
        Vec e(d * d);
        e[i * d + j] = 1;
        basis.push_back(std::move(e));
      }

  for (const auto& A : action) {
    if (basis.empty()) break;
    Matrix D(d * d, basis.size());
    for (std::size_t t = 0; t < basis.size(); ++t) {
      Vec col = flatten_commutator(basis[t], A);
      for (std::size_t r = 0; r < d * d; ++r) D.at(r, t) = std::move(col[r]);
    }
    std::vector<Vec> next;
    for (const auto& y : nullspace(D)) {
      Vec v(d * d);
      for (std::size_t t = 0; t < y.size(); ++t)
        if (y[t] != 0)
          for (std::size_t r = 0; r < d * d; ++r) v[r] += y[t] * basis[t][r];
      next.push_back(std::move(v));
    }
    basis = std::move(next);
  }

  ModuleSplit out;
  out.commutant_dim = basis.size();
  if (out.commutant_dim == 1) {
    out.components.push_back(Subspace::span(am.rows, a.dim()));
    return out;
  }
  if (out.commutant_dim != 2) return out;

  // Pick a non-scalar commutant element X.
  Vec id(d * d);
  for (std::size_t i = 0; i < d; ++i) id[i * d + i] = 1;
  Vec x;
  for (const auto& b : basis) {
    Rat tr = 0;
    for (std::size_t i = 0; i < d; ++i) tr += b[i * d + i];
    Vec diff = b;
    bool scalar = true;
    for (std::size_t r = 0; r < d * d; ++r) {
      diff[r] -= tr / int(d) * id[r];
      if (diff[r] != 0) scalar = false;
    }
    if (!scalar) {
      x = b;
      break;
    }
  }
  if (x.empty()) return out;

  // Minimal polynomial: X^2 = alpha X + beta I inside the 2-dim commutant.
  Vec x2(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Rat v = 0;
      for (std::size_t k = 0; k < d; ++k) v += x[i * d + k] * x[k * d + j];
      x2[i * d + j] = std::move(v);
    }
  Matrix S(d * d, 2);
  for (std::size_t r = 0; r < d * d; ++r) {
    S.at(r, 0) = x[r];
    S.at(r, 1) = id[r];
  }
  auto ab = solve(S, x2);
  if (!ab) return out;
  Rat alpha = (*ab)[0], beta = (*ab)[1];
  auto s = rat_sqrt(alpha * alpha + 4 * beta);
  if (!s) {
    // Irreducible with a quadratic endomorphism field.
    out.components.push_back(Subspace::span(am.rows, a.dim()));
    return out;
  }
  if (*s == 0) return out;  // nilpotent part in the commutant; undecided
  Rat l1 = (alpha + *s) / 2, l2 = (alpha - *s) / 2;

  std::vector<Subspace> comps;
  for (const Rat& lambda : {l1, l2}) {
    Matrix M(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        M.at(i, j) = x[i * d + j];
        if (i == j) M.at(i, j) -= lambda;
      }
    comps.push_back(rows_to_subspace(nullspace(M), am.rows, a.dim()));
  }
  if (comps[0].dim() == 0 || comps[1].dim() == 0 ||
      comps[0].dim() + comps[1].dim() != d)
    return out;
  out.components = std::move(comps);
  return out;
}

}  // namespace sgen
