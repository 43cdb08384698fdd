#include "sgen/weights.hpp"

#include <algorithm>
#include <cstdlib>

namespace sgen {

CartanFrame standard_cartan(const SuperAlgebra& a) {
  if (!a.has_cartan())
    throw usage_error(a.name() + ": no standard Cartan frame recorded");
  CartanFrame f;
  f.alg = &a;
  f.h = a.cartan_coords();
  f.labels = a.cartan_labels();
  return f;
}

std::optional<Weight> basis_weight(const SuperAlgebra& a, const CartanFrame& f,
                                   std::size_t i) {
  Weight w;
  Element e = Element::basis(a, i);
  for (const auto& hc : f.h) {
    Element r = bracket(Element(a, hc), e);
    Rat lambda = r.c[i];
    r.c[i] = 0;
    if (!r.is_zero()) return std::nullopt;
    w.push_back(lambda);
  }
  return w;
}

std::vector<WeightSpace> decompose(const SuperAlgebra& a, const CartanFrame& f,
                                   const WeightFilter& filter) {
  std::vector<WeightSpace> out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (filter.parity && a.parity_of(i) != *filter.parity) continue;
    if (filter.z_degree) {
      if (!a.has_z_degree() || a.z_degree()[i] != *filter.z_degree) continue;
    }
    auto w = basis_weight(a, f, i);
    if (!w)
      throw usage_error(a.name() + ": basis element " + a.labels()[i] +
                        " is not a joint eigenvector of the frame");
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const WeightSpace& s) { return s.weight == *w; });
    if (it == out.end()) {
      out.push_back({std::move(*w), {i}});
    } else {
      it->members.push_back(i);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const WeightSpace& x, const WeightSpace& y) {
              return x.weight < y.weight;
            });
  return out;
}

Rat pair_weight(const Weight& w, const Vec& coeffs) {
  Rat v = 0;
  for (std::size_t k = 0; k < w.size(); ++k) v += w[k] * coeffs[k];
  return v;
}

namespace {

bool tuple_separates(const Vec& t, const std::vector<Weight>& fns,
                     bool require_nonzero) {
  std::vector<Rat> vals;
  vals.reserve(fns.size());
  for (const auto& w : fns) {
    Rat v = pair_weight(w, t);
    bool w_nonzero =
        std::any_of(w.begin(), w.end(), [](const Rat& x) { return x != 0; });
    if (require_nonzero && w_nonzero && v == 0) return false;
    vals.push_back(std::move(v));
  }
  std::sort(vals.begin(), vals.end());
  return std::adjacent_find(vals.begin(), vals.end()) == vals.end();
}

/// Digit order 0, 1, -1, 2, -2, ...
long digit_value(long d) { return (d % 2) ? (d + 1) / 2 : -d / 2; }

}  // namespace

OmegaResult omega_element(const SuperAlgebra& a, const CartanFrame& f,
                          const std::vector<Weight>& functionals,
                          bool require_nonzero, std::size_t skip) {
  const std::size_t r = f.rank();
  if (r == 0) throw usage_error(a.name() + ": empty Cartan frame");
  for (long B = 0; B <= 64; ++B) {
    std::vector<long> digits(r, 0);
    const long ndigits = 2 * B + 1;
    while (true) {
      long maxn = 0;
      Vec t(r);
      for (std::size_t k = 0; k < r; ++k) {
        long v = digit_value(digits[k]);
        maxn = std::max(maxn, std::abs(v));
        t[k] = v;
      }
      if (maxn == B && tuple_separates(t, functionals, require_nonzero)) {
        if (skip == 0) {
          Element h = Element::zero(a);
          for (std::size_t k = 0; k < r; ++k)
            h = h + Element(a, f.h[k]) * t[k];
          return {std::move(t), std::move(h), B};
        }
        --skip;
      }
      std::size_t k = 0;
      while (k < r && ++digits[k] == ndigits) digits[k++] = 0;
      if (k == r) break;
    }
  }
  throw usage_error(a.name() + ": no separating frame element within bound");
}

std::vector<Element> vandermonde_extract(const Element& h, const Element& x,
                                         const std::vector<Rat>& eigenvalues) {
  const SuperAlgebra& a = *x.alg;
  const std::size_t m = eigenvalues.size();
  if (m == 0) throw usage_error("vandermonde_extract: no eigenvalues given");
  std::vector<Element> powers{x};
  for (std::size_t k = 1; k < m; ++k)
    powers.push_back(bracket(h, powers.back()));

  Matrix aug(m, 2 * m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < m; ++j) {
      Rat p = 1;
      for (std::size_t q = 0; q < k; ++q) p *= eigenvalues[j];
      aug.at(k, j) = p;
    }
    aug.at(k, m + k) = 1;
  }
  auto [red, rk] = rref(aug);
  if (rk < m)
    throw usage_error("vandermonde_extract: eigenvalues not distinct");

  std::vector<Element> comps;
  for (std::size_t j = 0; j < m; ++j) {
    Element v = Element::zero(a);
    for (std::size_t k = 0; k < m; ++k)
      v = v + powers[k] * red.at(j, m + k);
    comps.push_back(std::move(v));
  }
  for (std::size_t j = 0; j < m; ++j) {
    Element check = bracket(h, comps[j]) - comps[j] * eigenvalues[j];
    if (!check.is_zero())
      throw usage_error(
          "vandermonde_extract: component outside the listed eigenvalues");
  }
  return comps;
}

}  // namespace sgen
