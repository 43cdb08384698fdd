#include "sgen/generate.hpp"

#include <algorithm>

namespace sgen {

namespace {

std::vector<Weight> dedup_weights(std::vector<Weight> ws) {
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  return ws;
}

bool weight_nonzero(const Weight& w) {
  return std::any_of(w.begin(), w.end(), [](const Rat& x) { return x != 0; });
}

std::vector<std::size_t> layer_indices(const SuperAlgebra& a, int k) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.z_degree()[i] == k) out.push_back(i);
  return out;
}

Weight weight_of(const SuperAlgebra& a, const CartanFrame& f, std::size_t i) {
  auto w = basis_weight(a, f, i);
  if (!w)
    throw usage_error(a.name() + ": " + a.labels()[i] +
                      " is not a frame eigenvector");
  return *w;
}

std::vector<Weight> separating_family_L0(const SuperAlgebra& a,
                                         const CartanFrame& f) {
  std::vector<Weight> ws;
  for (std::size_t i : layer_indices(a, 0)) {
    Weight w = weight_of(a, f, i);
    if (weight_nonzero(w)) ws.push_back(std::move(w));
  }
  return dedup_weights(std::move(ws));
}

}  // namespace

Element ad_exp(const Element& u, const Element& y) {
  Element acc = y, term = y;
  for (std::size_t k = 1; k <= y.alg->dim() + 1; ++k) {
    term = bracket(u, term) * rat(1, long(k));
    if (term.is_zero()) return acc;
    acc = acc + term;
  }
  throw usage_error(y.alg->name() + ": ad_exp argument is not ad-nilpotent");
}

namespace {

bool lex_positive(const Weight& w) {
  for (const auto& v : w) {
    if (v > 0) return true;
    if (v < 0) return false;
  }
  return false;
}

/// Nonzero projection onto every nonzero-weight space of the z-degree-0
/// layer (the basis is weight-aligned, so projections read off coordinates).
bool balanced_in_null(const SuperAlgebra& a, const CartanFrame& f,
                      const Element& x) {
  std::vector<std::pair<Weight, bool>> hit;  // weight -> seen nonzero coord
  for (std::size_t i : layer_indices(a, 0)) {
    Weight w = weight_of(a, f, i);
    if (!weight_nonzero(w)) continue;
    auto it = std::find_if(hit.begin(), hit.end(),
                           [&](const auto& p) { return p.first == w; });
    if (it == hit.end()) {
      hit.emplace_back(std::move(w), x.c[i] != 0);
    } else if (x.c[i] != 0) {
      it->second = true;
    }
  }
  return std::all_of(hit.begin(), hit.end(),
                     [](const auto& p) { return p.second; });
}

/// Searches a lex-positive nilpotent u in the null such that exp(-ad u)(x0)
/// is balanced there; then x0 is balanced relative to the conjugated Cartan
/// subalgebra exp(ad u)(frame span).
std::optional<Element> balancing_nilpotent(const SuperAlgebra& a,
                                           const CartanFrame& f,
                                           const Element& x0) {
  std::vector<std::size_t> pos;
  for (std::size_t i : layer_indices(a, 0))
    if (lex_positive(weight_of(a, f, i))) pos.push_back(i);
  if (pos.empty()) return std::nullopt;
  const std::size_t r = pos.size();

  auto try_coeffs = [&](const std::vector<long>& cs) -> std::optional<Element> {
    Element u = Element::zero(a);
    for (std::size_t k = 0; k < r; ++k)
      u = u + Element::basis(a, pos[k]) * Rat(cs[k]);
    if (u.is_zero()) return std::nullopt;
    if (balanced_in_null(a, f, ad_exp(u * Rat(-1), x0))) return u;
    return std::nullopt;
  };

  // Balancedness is Zariski-open, so a short list of generic integer tuples
  // suffices when a balancing u exists at all.
  if (auto u = try_coeffs(std::vector<long>(r, 1))) return u;
  for (long p = 1; p <= 6; ++p) {
    std::vector<long> ramp(r);
    for (std::size_t k = 0; k < r; ++k) {
      long v = 1;
      for (long q = 0; q < p; ++q) v *= long(k) + 2;
      ramp[k] = v;
    }
    if (auto u = try_coeffs(ramp)) return u;
  }
  for (long seed = 1; seed <= 8; ++seed) {
    std::vector<long> cs(r);
    long v = seed;
    for (std::size_t k = 0; k < r; ++k) {
      v = (v * 37 + 11) % 101;
      cs[k] = v - 50;
    }
    if (auto u = try_coeffs(cs)) return u;
  }
  return std::nullopt;
}

}  // namespace

GeneratorCandidate classical_candidate(const BuiltFamily& f) {
  const SuperAlgebra& a = *f.alg;
  CartanFrame frame = standard_cartan(a);
  auto odd = decompose(a, frame, {.parity = 1});

  GeneratorCandidate c;
  c.alg = &a;
  bool all_odd = false;
  if (f.id.kind == Kind::A && f.id.params == std::vector<int>{1, 1}) {
    c.recipe = "classical-A11";
    all_odd = true;
  } else if (f.id.kind == Kind::P && f.id.params == std::vector<int>{3}) {
    c.recipe = "classical-P3";
    all_odd = true;
  } else if (f.id.kind == Kind::Q) {
    c.recipe = "classical-Qn";
    all_odd = true;
  } else {
    c.recipe = "classical-case1";
  }

  c.rest = Element::zero(a);
  if (all_odd) {
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (a.parity_of(i) == 1) c.rest = c.rest + Element::basis(a, i);
    c.ingredients.push_back({"odd-sum", {}, c.rest});
  } else {
    for (const auto& ws : odd) {
      Element v = Element::basis(a, ws.members.front());
      c.rest = c.rest + v;
      c.ingredients.push_back({"odd-weight-vector", ws.weight, v});
    }
  }

  for (const auto& ws : odd) c.h_functionals.push_back(ws.weight);
  c.h_functionals = dedup_weights(std::move(c.h_functionals));
  c.remake_h = [&a, frame, fns = c.h_functionals](std::size_t skip) {
    return omega_element(a, frame, fns, true, skip).h;
  };
  c.h = c.remake_h(0);
  c.ingredients.push_back({"h", {}, c.h});
  c.element = c.rest + c.h;
  return c;
}

GeneratorCandidate cartan_candidate(const BuiltFamily& f) {
  const SuperAlgebra& a = *f.alg;
  if (!a.has_z_degree())
    throw usage_error(a.name() + ": cartan candidate needs a z-degree");
  CartanFrame frame = standard_cartan(a);
  auto lm1 = layer_indices(a, -1);
  auto l1 = layer_indices(a, 1);

  GeneratorCandidate c;
  c.alg = &a;
  c.h_functionals = separating_family_L0(a, frame);

  bool split = f.id.kind == Kind::W ||
               (f.id.kind == Kind::H && f.id.params == std::vector<int>{6});
  if (!split) {
    c.recipe = "cartan-single";
    for (std::size_t i1 : l1) {
      Element x1 = Element::basis(a, i1);
      if (!bracket(x1, x1).is_zero()) continue;
      Weight w1 = weight_of(a, frame, i1);
      for (std::size_t im : lm1) {
        Weight wm = weight_of(a, frame, im);
        if (wm == w1) continue;
        Element xm = Element::basis(a, im);
        Element br = bracket(xm, x1);
        if (br.is_zero()) continue;
        Element x0 = br * 2;
        auto u = balancing_nilpotent(a, frame, x0);
        if (!u) continue;
        c.remake_h = [&a, frame, fns = c.h_functionals, u = *u](std::size_t skip) {
          return ad_exp(u, omega_element(a, frame, fns, true, skip).h);
        };
        c.h = c.remake_h(0);
        c.rest = xm + x0 + x1;
        c.element = c.rest + c.h;
        c.ingredients.push_back({"x-1", wm, xm});
        c.ingredients.push_back({"x0", {}, x0});
        c.ingredients.push_back({"x1", w1, x1});
        c.ingredients.push_back({"h", {}, c.h});
        return c;
      }
    }
    throw usage_error(a.name() + ": no (x-1, x1) pair passes the conditions");
  }

  c.recipe = "cartan-split";
  std::vector<Vec> actors;
  for (std::size_t i : layer_indices(a, 0))
    actors.push_back(Element::basis(a, i).c);
  std::vector<Vec> l1rows;
  for (std::size_t i : l1) l1rows.push_back(Element::basis(a, i).c);
  ModuleSplit ms =
      analyze_module(a, frame, actors, Subspace::span(l1rows, a.dim()));
  if (ms.components.size() != 2)
    throw usage_error(a.name() + ": degree-1 layer did not split in two");
  AdaptedModule m1 = adapt_to_weights(a, frame, ms.components[0]);
  AdaptedModule m2 = adapt_to_weights(a, frame, ms.components[1]);

  for (std::size_t im : lm1) {
    Weight wm = weight_of(a, frame, im);
    if (!weight_nonzero(wm)) continue;
    Element xm = Element::basis(a, im);
    for (std::size_t i = 0; i < m1.rows.size(); ++i) {
      if (!weight_nonzero(m1.weights[i]) || m1.weights[i] == wm) continue;
      Element v1(a, m1.rows[i]);
      for (std::size_t j = 0; j < m2.rows.size(); ++j) {
        if (!weight_nonzero(m2.weights[j]) || m2.weights[j] == wm ||
            m2.weights[j] == m1.weights[i])
          continue;
        Element v2(a, m2.rows[j]);
        Element s = v1 + v2;
        if (!bracket(s, s).is_zero()) continue;
        Element br = bracket(xm, s);
        if (br.is_zero()) continue;
        Element x0 = br * 2;
        auto u = balancing_nilpotent(a, frame, x0);
        if (!u) continue;
        c.rest = xm + x0 + s;
        c.ingredients.push_back({"x-1", wm, xm});
        c.ingredients.push_back({"x0", {}, x0});
        if (f.id.kind == Kind::W) {
          Element z = Element::zero(a);
          for (const auto& hk : frame.h) z = z + Element(a, hk);
          c.rest = c.rest + z;
          c.ingredients.push_back({"z", {}, z});
        }
        c.ingredients.push_back({"x1-1", m1.weights[i], v1});
        c.ingredients.push_back({"x1-2", m2.weights[j], v2});
        c.remake_h = [&a, frame, fns = c.h_functionals, u = *u](std::size_t skip) {
          return ad_exp(u, omega_element(a, frame, fns, true, skip).h);
        };
        c.h = c.remake_h(0);
        c.ingredients.push_back({"h", {}, c.h});
        c.element = c.rest + c.h;
        return c;
      }
    }
  }
  throw usage_error(a.name() + ": no (x-1, x1-1, x1-2) tuple passes the conditions");
}

GeneratorCandidate make_candidate(const BuiltFamily& f) {
  return f.id.is_cartan() ? cartan_candidate(f) : classical_candidate(f);
}

Certificate certify(const BuiltFamily& f, const GeneratorCandidate& c,
                    ClosureMode mode) {
  Certificate cert;
  cert.family = f.id;
  cert.recipe = c.recipe;
  for (const auto& ing : c.ingredients)
    cert.ingredients.push_back(
        {ing.role, ing.weight, ing.value.alg ? ing.value.pretty() : "0"});
  cert.h_coords = c.h.alg ? c.h.c : Vec(f.alg->dim());
  ClosureTrace trace;
  Subspace got = generated_subalgebra({c.element}, mode, &trace);
  cert.dims = trace.dims_per_round;
  cert.rounds = cert.dims.size();
  cert.final_dim = got.dim();
  cert.target_dim = f.alg->dim();
  cert.generated = cert.final_dim == cert.target_dim;
  if (c.recipe.rfind("cartan", 0) == 0) {
    CartanFrame frame = standard_cartan(*f.alg);
    for (const auto& ing : c.ingredients)
      if (ing.role == "x0") cert.x0_balanced = is_balanced(ing.value, frame);
  }
  return cert;
}

Certificate search_fallback(const BuiltFamily& f, const GeneratorCandidate& base,
                            std::size_t budget, ClosureMode mode) {
  if (budget < 1) throw usage_error("search_fallback: budget must be >= 1");
  Certificate cert = certify(f, base, mode);
  cert.attempts = 1;
  GeneratorCandidate c = base;
  while (!cert.generated && cert.attempts < budget) {
    std::size_t skip = cert.attempts;
    if (!c.remake_h) break;
    c.h = c.remake_h(skip);
    c.element = c.rest + c.h;
    for (auto& ing : c.ingredients)
      if (ing.role == "h") ing.value = c.h;
    std::size_t attempts = cert.attempts + 1;
    cert = certify(f, c, mode);
    cert.attempts = attempts;
  }
  return cert;
}

bool is_balanced(const Element& x, const CartanFrame& frame) {
  const SuperAlgebra& a = *x.alg;
  for (const auto& ws : decompose(a, frame, {.parity = 0})) {
    if (!weight_nonzero(ws.weight)) continue;
    bool hit = std::any_of(ws.members.begin(), ws.members.end(),
                           [&](std::size_t i) { return x.c[i] != 0; });
    if (!hit) return false;
  }
  return true;
}

}  // namespace sgen
