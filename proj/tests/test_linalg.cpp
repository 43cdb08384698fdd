#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sgen/linalg.hpp"

using namespace sgen;

namespace {

Matrix random_matrix(std::mt19937& gen, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-4, 4);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = d(gen);
  return m;
}

}  // namespace

TEST_CASE("rref of a known matrix") {
  Matrix m(3, 3);
  // rows: (1,2,3), (2,4,6), (1,0,1) -> rank 2
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
  m.at(1, 0) = 2; m.at(1, 1) = 4; m.at(1, 2) = 6;
  m.at(2, 0) = 1; m.at(2, 1) = 0; m.at(2, 2) = 1;
  auto [red, rk] = rref(m);
  CHECK(rk == 2);
  CHECK(red.rows() == 2);
  CHECK(red.at(0, 0) == 1);
  CHECK(red.at(0, 1) == 0);
  CHECK(red.at(0, 2) == 1);
  CHECK(red.at(1, 0) == 0);
  CHECK(red.at(1, 1) == 1);
  CHECK(red.at(1, 2) == 1);
}

TEST_CASE("solve returns an exact solution or detects inconsistency") {
  Matrix m(2, 2);
  m.at(0, 0) = 2; m.at(0, 1) = 1;
  m.at(1, 0) = 1; m.at(1, 1) = 3;
  auto x = solve(m, Vec{rat(1), rat(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == rat(1, 5));
  CHECK((*x)[1] == rat(3, 5));

  Matrix s(2, 1);
  s.at(0, 0) = 1; s.at(1, 0) = 2;
  CHECK_FALSE(solve(s, Vec{rat(1), rat(3)}).has_value());
  CHECK(solve(s, Vec{rat(1), rat(2)}).has_value());
}

TEST_CASE("rank plus nullity equals column count (random)") {
  std::mt19937 gen(7);
  for (int t = 0; t < 30; ++t) {
    std::size_t r = 1 + t % 5, c = 1 + (t * 3) % 6;
    Matrix m = random_matrix(gen, r, c);
    auto ns = nullspace(m);
    CHECK(rank(m) + ns.size() == c);
    for (const auto& v : ns) {
      for (std::size_t i = 0; i < r; ++i) {
        Rat acc = 0;
        for (std::size_t j = 0; j < c; ++j) acc += m.at(i, j) * v[j];
        CHECK(acc == 0);
      }
    }
  }
}

TEST_CASE("solve result satisfies the system (random)") {
  std::mt19937 gen(11);
  for (int t = 0; t < 30; ++t) {
    std::size_t r = 1 + t % 4, c = 1 + (t * 5) % 5;
    Matrix m = random_matrix(gen, r, c);
    // build a consistent rhs from a random x
    std::uniform_int_distribution<int> d(-3, 3);
    Vec x0(c);
    for (auto& v : x0) v = d(gen);
    Vec b(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) b[i] += m.at(i, j) * x0[j];
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    for (std::size_t i = 0; i < r; ++i) {
      Rat acc = 0;
      for (std::size_t j = 0; j < c; ++j) acc += m.at(i, j) * (*x)[j];
      CHECK(acc == b[i]);
    }
  }
}

TEST_CASE("subspace canonical form is order independent") {
  std::mt19937 gen(3);
  for (int t = 0; t < 20; ++t) {
    std::size_t c = 4 + t % 3;
    Matrix m = random_matrix(gen, 4, c);
    Subspace a(c), b(c);
    for (std::size_t i = 0; i < 4; ++i) a.insert(m.row(i));
    for (std::size_t i = 4; i-- > 0;) b.insert(m.row(i));
    CHECK(a == b);
  }
}

TEST_CASE("subspace membership, sum and intersection") {
  std::mt19937 gen(19);
  for (int t = 0; t < 20; ++t) {
    std::size_t c = 5;
    Matrix mu = random_matrix(gen, 2, c), mv = random_matrix(gen, 3, c);
    Subspace u(c), v(c);
    for (std::size_t i = 0; i < 2; ++i) u.insert(mu.row(i));
    for (std::size_t i = 0; i < 3; ++i) v.insert(mv.row(i));
    Subspace s = u.sum(v), x = u.intersect(v);
    CHECK(s.dim() + x.dim() == u.dim() + v.dim());
    CHECK(s.contains(u));
    CHECK(s.contains(v));
    for (const auto& row : x.rows()) {
      CHECK(u.contains(row));
      CHECK(v.contains(row));
    }
    for (const auto& row : u.rows()) CHECK_FALSE(u.insert(Vec(row)));
  }
}

TEST_CASE("insert reports growth exactly") {
  Subspace s(3);
  CHECK(s.insert(Vec{rat(1), rat(1), rat(0)}));
  CHECK(s.insert(Vec{rat(0), rat(1), rat(1)}));
  CHECK_FALSE(s.insert(Vec{rat(1), rat(2), rat(1)}));
  CHECK_FALSE(s.insert(Vec{rat(0), rat(0), rat(0)}));
  CHECK(s.insert(Vec{rat(0), rat(0), rat(1)}));
  CHECK(s.dim() == 3);
  CHECK(s.contains(Vec{rat(5), rat(-7), rat(13)}));
}
