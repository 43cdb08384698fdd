#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"
#include "sgen/families.hpp"
#include "sgen/weights.hpp"

using namespace sgen;
using sgen::test::Rng;

namespace {

Weight wt(std::initializer_list<int> v) {
  Weight w;
  for (int x : v) w.push_back(x);
  return w;
}

}  // namespace

TEST_CASE("frame elements commute and diagonalize the basis") {
  for (const auto& id : std::vector<FamilyId>{
           {Kind::A, {1, 1}}, {Kind::B, {1, 1}}, {Kind::P, {2}}, {Kind::Q, {2}},
           {Kind::W, {3}}, {Kind::S, {4}}, {Kind::St, {4}}, {Kind::H, {5}}}) {
    CAPTURE(id.display());
    BuiltFamily f = build_family(id);
    const SuperAlgebra& a = *f.alg;
    CartanFrame frame = standard_cartan(a);
    CHECK(frame.rank() > 0);
    for (const auto& h1 : frame.h)
      for (const auto& h2 : frame.h)
        CHECK(bracket(Element(a, h1), Element(a, h2)).is_zero());
    for (std::size_t i = 0; i < a.dim(); ++i)
      CHECK(basis_weight(a, frame, i).has_value());
    // weight spaces partition the basis
    std::size_t total = 0;
    for (const auto& ws : decompose(a, frame)) total += ws.members.size();
    CHECK(total == a.dim());
  }
}

TEST_CASE("weights are additive along the bracket") {
  BuiltFamily f = build_family({Kind::B, {1, 1}});
  const SuperAlgebra& a = *f.alg;
  CartanFrame frame = standard_cartan(a);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Weight wi = *basis_weight(a, frame, i);
    for (std::size_t j = i; j < a.dim(); ++j) {
      Weight wj = *basis_weight(a, frame, j);
      for (const auto& [k, c] : a.entry(i, j)) {
        Weight wk = *basis_weight(a, frame, k);
        for (std::size_t t = 0; t < wk.size(); ++t) CHECK(wk[t] == wi[t] + wj[t]);
      }
    }
  }
}

TEST_CASE("odd weights of the rank-1|1 special linear quotient") {
  BuiltFamily f = build_family({Kind::A, {1, 1}});
  const SuperAlgebra& a = *f.alg;
  CartanFrame frame = standard_cartan(a);
  WeightFilter odd;
  odd.parity = 1;
  std::map<Weight, std::set<std::string>> got;
  for (const auto& ws : decompose(a, frame, odd))
    for (std::size_t i : ws.members) got[ws.weight].insert(a.labels()[i]);
  std::map<Weight, std::set<std::string>> expect = {
      {wt({0, 1}), {"e13", "e42"}},
      {wt({1, 0}), {"e14", "e32"}},
      {wt({-1, 0}), {"e23", "e41"}},
      {wt({0, -1}), {"e31", "e24"}},
  };
  CHECK(got == expect);
}

TEST_CASE("zero odd weight space of the rank-2 queer family") {
  BuiltFamily f = build_family({Kind::Q, {2}});
  CartanFrame frame = standard_cartan(*f.alg);
  WeightFilter odd;
  odd.parity = 1;
  for (const auto& ws : decompose(*f.alg, frame, odd))
    if (ws.weight == Weight(2, rat(0))) CHECK(ws.members.size() == 2);
}

TEST_CASE("separating element enumeration") {
  BuiltFamily f = build_family({Kind::A, {1, 0}});
  const SuperAlgebra& a = *f.alg;
  CartanFrame frame = standard_cartan(a);
  WeightFilter odd;
  odd.parity = 1;
  std::vector<Weight> functionals;
  for (const auto& ws : decompose(a, frame, odd)) functionals.push_back(ws.weight);
  OmegaResult r0 = omega_element(a, frame, functionals);
  // pairings are pairwise distinct and nonzero on nonzero functionals
  std::set<Rat> seen;
  for (const auto& w : functionals) {
    Rat p = pair_weight(w, r0.coeffs);
    CHECK(seen.insert(p).second);
    if (w != Weight(frame.rank(), rat(0))) CHECK(p != 0);
  }
  // deterministic, and skip moves to a different tuple
  OmegaResult r0b = omega_element(a, frame, functionals);
  CHECK(r0.coeffs == r0b.coeffs);
  OmegaResult r1 = omega_element(a, frame, functionals, true, 1);
  CHECK(r1.coeffs != r0.coeffs);
  std::set<Rat> seen1;
  for (const auto& w : functionals) CHECK(seen1.insert(pair_weight(w, r1.coeffs)).second);
}

TEST_CASE("eigencomponent extraction on a single eigenvector") {
  BuiltFamily f = build_family({Kind::A, {1, 0}});
  const SuperAlgebra& a = *f.alg;
  CartanFrame frame = standard_cartan(a);
  std::size_t i = 0;
  Weight w = *basis_weight(a, frame, i);
  Element h(a, frame.h[0]);
  Rat lambda = w[0];
  auto parts = vandermonde_extract(h, Element::basis(a, i), {lambda});
  REQUIRE(parts.size() == 1);
  CHECK(parts[0] == Element::basis(a, i));
}

TEST_CASE("eigencomponent extraction recovers the odd weight pairs") {
  BuiltFamily f = build_family({Kind::A, {1, 1}});
  const SuperAlgebra& a = *f.alg;
  CartanFrame frame = standard_cartan(a);
  WeightFilter odd;
  odd.parity = 1;
  auto spaces = decompose(a, frame, odd);
  std::vector<Weight> functionals;
  for (const auto& ws : spaces) functionals.push_back(ws.weight);
  OmegaResult om = omega_element(a, frame, functionals);
  Element x = Element::zero(a);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.parity_of(i) == 1) x = x + Element::basis(a, i);
  std::vector<Rat> eigen;
  for (const auto& w : functionals) eigen.push_back(pair_weight(w, om.coeffs));
  auto parts = vandermonde_extract(om.h, x, eigen);
  REQUIRE(parts.size() == spaces.size());
  for (std::size_t k = 0; k < spaces.size(); ++k) {
    Element want = Element::zero(a);
    for (std::size_t i : spaces[k].members) want = want + Element::basis(a, i);
    CHECK(parts[k] == want);
  }
}

TEST_CASE("eigencomponent extraction matches direct projection (50 random)") {
  BuiltFamily f = build_family({Kind::W, {3}});
  const SuperAlgebra& a = *f.alg;
  CartanFrame frame = standard_cartan(a);
  auto spaces = decompose(a, frame);
  std::vector<Weight> functionals;
  for (const auto& ws : spaces) functionals.push_back(ws.weight);
  OmegaResult om = omega_element(a, frame, functionals);
  std::vector<Rat> pairings;
  for (const auto& w : functionals) pairings.push_back(pair_weight(w, om.coeffs));
  std::vector<Rat> eigen(pairings);
  std::sort(eigen.begin(), eigen.end());
  eigen.erase(std::unique(eigen.begin(), eigen.end()), eigen.end());
  Rng rng;
  for (int t = 0; t < 50; ++t) {
    Element x = rng.element(a);
    auto parts = vandermonde_extract(om.h, x, eigen);
    REQUIRE(parts.size() == eigen.size());
    Element sum = Element::zero(a);
    for (std::size_t k = 0; k < eigen.size(); ++k) {
      // direct projection: keep basis coordinates whose pairing matches
      Element proj = Element::zero(a);
      for (std::size_t s = 0; s < spaces.size(); ++s) {
        if (pairings[s] != eigen[k]) continue;
        for (std::size_t i : spaces[s].members) {
          Vec v(a.dim());
          v[i] = x.c[i];
          proj = proj + Element(a, std::move(v));
        }
      }
      CHECK(parts[k] == proj);
      sum = sum + parts[k];
    }
    CHECK(sum == x);
  }
}
