#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sgen/cartan.hpp"
#include "sgen/families.hpp"
#include "sgen/modules.hpp"
#include "sgen/weights.hpp"

using namespace sgen;

namespace {

std::vector<FamilyId> cartan_ids() {
  std::vector<FamilyId> out;
  for (const auto& id : acceptance_matrix())
    if (id.is_cartan()) out.push_back(id);
  return out;
}

std::set<Weight> layer_weights(const SuperAlgebra& a, int k) {
  CartanFrame frame = standard_cartan(a);
  WeightFilter filter;
  filter.z_degree = k;
  std::set<Weight> out;
  for (const auto& ws : decompose(a, frame, filter)) out.insert(ws.weight);
  return out;
}

}  // namespace

TEST_CASE("dimensions, spanning-set ranks and axioms") {
  struct Row {
    FamilyId id;
    std::size_t want;
  };
  std::vector<Row> rows = {
      {{Kind::W, {3}}, 24},  {{Kind::W, {4}}, 64},  {{Kind::W, {5}}, 160},
      {{Kind::S, {4}}, 49},  {{Kind::S, {5}}, 129}, {{Kind::St, {4}}, 49},
      {{Kind::H, {5}}, 30},  {{Kind::H, {6}}, 62},
  };
  for (const auto& row : rows) {
    CAPTURE(row.id.display());
    CHECK(family_dimension_formula(row.id) == row.want);
    // independent rank of the defining spanning set
    int n = row.id.params[0];
    switch (row.id.kind) {
      case Kind::W: CHECK(w_span_rank(n) == row.want); break;
      case Kind::S: CHECK(s_span_rank(n) == row.want); break;
      case Kind::St: CHECK(s_span_rank(n) == row.want); break;
      case Kind::H: CHECK(h_span_rank(n) == row.want); break;
      default: break;
    }
    if (row.want <= 64) {
      BuiltFamily f = build_family(row.id);
      CHECK(f.alg->dim() == row.want);
      CHECK(check_axioms(*f.alg).ok);
    }
  }
}

TEST_CASE("grading layers") {
  BuiltFamily w = build_family({Kind::W, {3}});
  CHECK(w.alg->has_z_degree());
  CHECK(w.alg->z_graded());
  CHECK(z_layer(*w.alg, -1).dim() == 3);
  CHECK(z_layer(*w.alg, 0).dim() == 9);
  CHECK(z_layer(*w.alg, 1).dim() == 9);
  CHECK(z_layer(*w.alg, 2).dim() == 3);
  // degree -1 + 0 + ... adds up
  std::size_t total = 0;
  for (int k = -1; k <= 2; ++k) total += z_layer(*w.alg, k).dim();
  CHECK(total == w.alg->dim());
  // parity is degree mod 2
  for (std::size_t i = 0; i < w.alg->dim(); ++i)
    CHECK(w.alg->parity_of(i) == ((w.alg->z_degree()[i] % 2) + 2) % 2);
}

TEST_CASE("degree additivity of the bracket on graded families") {
  for (const auto& id : std::vector<FamilyId>{{Kind::W, {3}}, {Kind::S, {4}}, {Kind::H, {5}}}) {
    CAPTURE(id.display());
    BuiltFamily f = build_family(id);
    const SuperAlgebra& a = *f.alg;
    REQUIRE(a.z_graded());
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = i; j < a.dim(); ++j)
        for (const auto& [k, c] : a.entry(i, j))
          CHECK(a.z_degree()[k] == a.z_degree()[i] + a.z_degree()[j]);
  }
}

TEST_CASE("the deformed layer breaks strict gradedness") {
  BuiltFamily st = build_family({Kind::St, {4}});
  const SuperAlgebra& a = *st.alg;
  CHECK(a.has_z_degree());
  CHECK_FALSE(a.z_graded());
  bool violated = false;
  for (std::size_t i = 0; i < a.dim() && !violated; ++i)
    for (std::size_t j = i; j < a.dim() && !violated; ++j)
      for (const auto& [k, c] : a.entry(i, j))
        violated |= a.z_degree()[k] != a.z_degree()[i] + a.z_degree()[j];
  CHECK(violated);
  CHECK(check_axioms(a).ok);
}

TEST_CASE("top and bottom weight sets") {
  for (const auto& id : cartan_ids()) {
    CAPTURE(id.display());
    BuiltFamily f = build_family(id);
    std::set<Weight> dm = layer_weights(*f.alg, -1), dp = layer_weights(*f.alg, 1);
    if (id.kind == Kind::H) {
      CHECK(dm != dp);
    } else {
      // disjoint
      for (const auto& w : dm) CHECK(dp.count(w) == 0);
    }
  }
}

TEST_CASE("bottom layer carries the negative unit weights") {
  BuiltFamily w = build_family({Kind::W, {3}});
  std::set<Weight> dm = layer_weights(*w.alg, -1);
  std::set<Weight> expect;
  for (int j = 0; j < 3; ++j) {
    Weight wgt(3, rat(0));
    wgt[j] = -1;
    expect.insert(wgt);
  }
  CHECK(dm == expect);
}

TEST_CASE("local part generates the whole algebra") {
  for (const auto& id : cartan_ids()) {
    CAPTURE(id.display());
    BuiltFamily f = build_family(id);
    const SuperAlgebra& a = *f.alg;
    std::vector<Element> seeds;
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (a.z_degree()[i] >= -1 && a.z_degree()[i] <= 1)
        seeds.push_back(Element::basis(a, i));
    CHECK(generated_subalgebra(seeds).dim() == a.dim());
  }
}

TEST_CASE("square-zero vectors exist in the first layer") {
  for (const auto& id : cartan_ids()) {
    CAPTURE(id.display());
    BuiltFamily f = build_family(id);
    const SuperAlgebra& a = *f.alg;
    bool found = false;
    for (std::size_t i = 0; i < a.dim() && !found; ++i) {
      if (a.z_degree()[i] != 1) continue;
      Element v = Element::basis(a, i);
      found = bracket(v, v).is_zero();
    }
    CHECK(found);
  }
}

TEST_CASE("number of irreducible summands in the first layer") {
  for (const auto& id : cartan_ids()) {
    CAPTURE(id.display());
    BuiltFamily f = build_family(id);
    const SuperAlgebra& a = *f.alg;
    CartanFrame frame = standard_cartan(a);
    std::vector<Vec> actors;
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (a.z_degree()[i] == 0) actors.push_back(Element::basis(a, i).c);
    ModuleSplit split = analyze_module(a, frame, actors, z_layer(a, 1));
    bool two = id.kind == Kind::W || (id.kind == Kind::H && id.params[0] == 6);
    REQUIRE(!split.components.empty());
    CHECK(split.components.size() == (two ? 2u : 1u));
    if (two) {
      CHECK(split.commutant_dim == 2);
      CHECK(split.components[0].sum(split.components[1]) == z_layer(a, 1));
      CHECK(split.components[0].intersect(split.components[1]).dim() == 0);
      // each component really is invariant under the null layer
      for (const auto& comp : split.components) {
        for (const auto& act : actors) {
          for (const auto& row : comp.rows()) {
            Element br = bracket(Element(a, act), Element(a, row));
            CHECK(comp.contains(br.c));
          }
        }
      }
    } else {
      CHECK(split.commutant_dim == 1);
    }
  }
}

TEST_CASE("module closure and weight adaptation") {
  BuiltFamily f = build_family({Kind::W, {3}});
  const SuperAlgebra& a = *f.alg;
  CartanFrame frame = standard_cartan(a);
  std::vector<Vec> actors;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.z_degree()[i] == 0) actors.push_back(Element::basis(a, i).c);
  // closure of a single layer-1 vector under the null layer stays inside layer 1
  std::size_t seed = 0;
  while (a.z_degree()[seed] != 1) ++seed;
  Subspace m = module_closure(a, actors, {Element::basis(a, seed).c});
  CHECK(z_layer(a, 1).contains(m));
  AdaptedModule am = adapt_to_weights(a, frame, m);
  CHECK(am.rows.size() == m.dim());
  for (std::size_t r = 0; r < am.rows.size(); ++r) {
    // each adapted row is a frame eigenvector of the recorded weight
    Element x(a, am.rows[r]);
    for (std::size_t k = 0; k < frame.rank(); ++k) {
      Element hx = bracket(Element(a, frame.h[k]), x);
      CHECK(hx == x * am.weights[r][k]);
    }
  }
  auto mats = restricted_action(a, actors, am);
  CHECK(mats.size() == actors.size());
  for (const auto& mt : mats) {
    CHECK(mt.rows() == m.dim());
    CHECK(mt.cols() == m.dim());
  }
}
