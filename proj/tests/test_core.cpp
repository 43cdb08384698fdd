#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "sgen/classical.hpp"
#include "sgen/subalgebra.hpp"
#include "sgen/superalgebra.hpp"

using namespace sgen;
using sgen::test::Rng;
using sgen::test::naive_closure;

namespace {

Element el(const SuperAlgebra& a, std::initializer_list<std::pair<const char*, int>> terms) {
  Vec v(a.dim());
  for (const auto& [label, c] : terms) v[a.index_of(label)] += c;
  return Element(a, std::move(v));
}

}  // namespace

TEST_CASE("bracket sign rule: odd-odd symmetric, mixed antisymmetric") {
  auto gl = build_gl(1, 1);
  Element x = el(*gl, {{"e12", 1}}), y = el(*gl, {{"e21", 1}});
  Element h = el(*gl, {{"e11", 1}});
  // two odd elements: [x,y] = [y,x]
  CHECK(bracket(x, y) == bracket(y, x));
  CHECK(bracket(x, y) == el(*gl, {{"e11", 1}, {"e22", 1}}));
  // even-odd: [h,x] = -[x,h]
  CHECK(bracket(h, x) == x);
  CHECK(bracket(x, h) == x * rat(-1));
  // [x,x] need not vanish for odd x but here does; [y,y] too
  CHECK(bracket(x, x).is_zero());
  CHECK(bracket(y, y).is_zero());
}

TEST_CASE("element arithmetic and parity") {
  auto gl = build_gl(1, 1);
  Element x = el(*gl, {{"e12", 1}}), h = el(*gl, {{"e11", 1}});
  CHECK((x + x) == x * rat(2));
  CHECK((x - x).is_zero());
  CHECK(Element::zero(*gl).is_zero());
  CHECK(x.homogeneous_parity() == 1);
  CHECK(h.homogeneous_parity() == 0);
  CHECK((x + h).homogeneous_parity() == -1);
  CHECK(Element::basis(*gl, gl->index_of("e21")).pretty() == "e21");
}

TEST_CASE("bracket is bilinear (random)") {
  auto gl = build_gl(2, 1);
  Rng rng;
  for (int t = 0; t < 20; ++t) {
    Element x = rng.element(*gl), y = rng.element(*gl), z = rng.element(*gl);
    CHECK(bracket(x + y, z) == bracket(x, z) + bracket(y, z));
    CHECK(bracket(x, y + z) == bracket(x, y) + bracket(x, z));
    CHECK(bracket(x * rat(3), y) == bracket(x, y) * rat(3));
  }
}

TEST_CASE("axiom check passes for honest tables") {
  CHECK(check_axioms(*build_gl(1, 1)).ok);
  CHECK(check_axioms(*build_gl(2, 2)).ok);
}

TEST_CASE("axiom check detects an injected sign fault") {
  // negate one coefficient in one stored off-diagonal entry, fresh copy each time
  int flipped = 0;
  for (std::size_t i = 0; i < 9 && flipped < 5; ++i) {
    for (std::size_t j = i + 1; j < 9 && flipped < 5; ++j) {
      auto gl = build_gl(2, 1);
      SparseVec sv = gl->entry(i, j);
      if (sv.empty()) continue;
      sv.front().second = -sv.front().second;
      gl->set_entry(i, j, std::move(sv));
      AxiomReport rep = check_axioms(*gl);
      CHECK_FALSE(rep.ok);
      CHECK_FALSE(rep.detail.empty());
      ++flipped;
    }
  }
  CHECK(flipped == 5);
}

TEST_CASE("closure agrees with the naive re-span oracle (50 random seed sets)") {
  auto gl = build_gl(2, 2);  // dim 16
  Rng rng;
  for (int t = 0; t < 50; ++t) {
    std::vector<Element> seeds;
    std::size_t k = 1 + rng.index(3);
    for (std::size_t s = 0; s < k; ++s) seeds.push_back(rng.element(*gl));
    Subspace fast = generated_subalgebra(seeds);
    Subspace slow = naive_closure(seeds);
    CHECK(fast == slow);
  }
}

TEST_CASE("closure result is bracket closed and contains the seeds") {
  auto gl = build_gl(2, 1);
  Rng rng;
  for (int t = 0; t < 10; ++t) {
    std::vector<Element> seeds{rng.element(*gl), rng.element(*gl)};
    for (ClosureMode mode : {ClosureMode::ungraded, ClosureMode::graded}) {
      Subspace s = generated_subalgebra(seeds, mode);
      for (const auto& e : seeds) CHECK(s.contains(e.c));
      const auto rows = s.rows();
      for (const auto& u : rows)
        for (const auto& v : rows)
          CHECK(s.contains(bracket(Element(*gl, u), Element(*gl, v)).c));
    }
  }
}

TEST_CASE("closure trace dims are strictly increasing") {
  auto gl = build_gl(2, 2);
  Rng rng;
  for (int t = 0; t < 10; ++t) {
    ClosureTrace trace;
    Subspace s = generated_subalgebra({rng.element(*gl)}, ClosureMode::ungraded, &trace);
    REQUIRE(!trace.dims_per_round.empty());
    // strictly increasing until the final fixpoint-confirming round
    for (std::size_t k = 1; k + 1 < trace.dims_per_round.size(); ++k)
      CHECK(trace.dims_per_round[k] > trace.dims_per_round[k - 1]);
    if (trace.dims_per_round.size() > 1) {
      std::size_t last = trace.dims_per_round.size() - 1;
      CHECK(trace.dims_per_round[last] >= trace.dims_per_round[last - 1]);
    }
    CHECK(trace.dims_per_round.back() == s.dim());
  }
}

TEST_CASE("generated ideal in gl(1|1)") {
  auto gl = build_gl(1, 1);
  Subspace ideal = generated_ideal({el(*gl, {{"e12", 1}})});
  CHECK(ideal.dim() == 2);
  CHECK(ideal.contains(el(*gl, {{"e12", 1}}).c));
  CHECK(ideal.contains(el(*gl, {{"e11", 1}, {"e22", 1}}).c));
  CHECK(is_ideal(*gl, ideal));
  Subspace notideal(gl->dim());
  notideal.insert(el(*gl, {{"e12", 1}}).c);
  CHECK_FALSE(is_ideal(*gl, notideal));
}

TEST_CASE("even and odd parts of gl(2|2)") {
  auto gl = build_gl(2, 2);
  CHECK(even_part(*gl).dim() == 8);
  CHECK(odd_part(*gl).dim() == 8);
  CHECK(even_part(*gl).sum(odd_part(*gl)).dim() == 16);
}

TEST_CASE("structure table JSON roundtrip") {
  auto gl = build_gl(2, 1);
  std::string text = table_to_json(*gl);
  auto back = table_from_json(text);
  REQUIRE(back != nullptr);
  CHECK(back->dim() == gl->dim());
  CHECK(back->labels() == gl->labels());
  CHECK(back->parity() == gl->parity());
  for (std::size_t i = 0; i < gl->dim(); ++i)
    for (std::size_t j = i; j < gl->dim(); ++j)
      CHECK(back->entry(i, j) == gl->entry(i, j));
  CHECK(table_to_json(*back) == text);
}

TEST_CASE("quotient map projects the kernel to zero and sections back") {
  BuiltFamily q = build_Q(2);
  REQUIRE(q.quot != nullptr);
  const QuotientMap& qm = *q.quot;
  CHECK(qm.quotient->dim() + qm.kernel.dim() == qm.parent->dim());
  for (const auto& krow : qm.kernel.rows())
    CHECK(qm.project(Element(*qm.parent, krow)).is_zero());
  for (std::size_t i = 0; i < qm.quotient->dim(); ++i)
    CHECK(qm.project(qm.section[i]) == Element::basis(*qm.quotient, i));
}
