#include "sgen/superalgebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace sgen {

SuperAlgebra::SuperAlgebra(std::string name, std::vector<std::string> labels,
                           std::vector<int> parity)
    : name_(std::move(name)),
      dim_(labels.size()),
      labels_(std::move(labels)),
      parity_(std::move(parity)),
      table_(dim_ * (dim_ + 1) / 2) {
  if (parity_.size() != dim_) throw usage_error("parity/labels size mismatch");
}

void SuperAlgebra::set_z_degree(std::vector<int> z, bool graded) {
  if (z.size() != dim_) throw usage_error("z_degree size mismatch");
  z_degree_ = std::move(z);
  z_graded_ = graded;
}

void SuperAlgebra::set_entry(std::size_t i, std::size_t j, SparseVec value) {
  if (i > j || j >= dim_) throw usage_error("set_entry: bad index pair");
  table_[pair_index(i, j)] = std::move(value);
}

const SparseVec& SuperAlgebra::entry(std::size_t i, std::size_t j) const {
  return table_[pair_index(i, j)];
}

SparseVec SuperAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i <= j) return entry(i, j);
  SparseVec out = entry(j, i);
  // [b_i,b_j] = -(-1)^{p_i p_j} [b_j,b_i]
  Rat s = (parity_[i] && parity_[j]) ? 1 : -1;
  for (auto& [k, c] : out) c *= s;
  return out;
}

std::size_t SuperAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < dim_; ++i) {
    if (labels_[i] == label) return i;
  }
  throw usage_error("unknown basis label: " + label);
}

void SuperAlgebra::set_cartan(std::vector<Vec> coords,
                              std::vector<std::string> labels) {
  cartan_coords_ = std::move(coords);
  cartan_labels_ = std::move(labels);
}

Element::Element(const SuperAlgebra& a, Vec coeffs) : alg(&a), c(std::move(coeffs)) {
  if (c.size() != a.dim()) throw dimension_error("element length mismatch");
}

Element Element::zero(const SuperAlgebra& a) { return Element(a, Vec(a.dim())); }

Element Element::basis(const SuperAlgebra& a, std::size_t i) {
  Vec v(a.dim());
  v[i] = 1;
  return Element(a, std::move(v));
}

bool Element::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; });
}

int Element::homogeneous_parity() const {
  int p = -1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (p == -1) p = alg->parity_of(i);
    else if (p != alg->parity_of(i)) return -1;
  }
  return p;
}

Element Element::operator+(const Element& o) const {
  if (alg != o.alg) throw usage_error("algebra mismatch");
  Element r = *this;
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

Element Element::operator-(const Element& o) const {
  if (alg != o.alg) throw usage_error("algebra mismatch");
  Element r = *this;
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
  return r;
}

Element Element::operator*(const Rat& s) const {
  Element r = *this;
  for (auto& x : r.c) x *= s;
  return r;
}

std::string Element::pretty() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Rat v = c[i];
    if (v > 0 && !first) os << "+";
    if (v == -1) os << "-";
    else if (v != 1) os << to_string(v) << "*";
    os << alg->labels()[i];
    first = false;
  }
  return first ? "0" : os.str();
}

namespace {

Vec bracket_vec(const SuperAlgebra& a, const Vec& x, const Vec& y) {
  Vec out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (y[j] == 0) continue;
      Rat f = x[i] * y[j];
      for (const auto& [k, c] : a.basis_bracket(i, j)) out[k] += f * c;
    }
  }
  return out;
}

}  // namespace

Element bracket(const Element& x, const Element& y) {
  if (x.alg == nullptr || x.alg != y.alg) throw usage_error("algebra mismatch");
  return Element(*x.alg, bracket_vec(*x.alg, x.c, y.c));
}

AxiomReport check_axioms(const SuperAlgebra& a) {
  std::size_t d = a.dim();
  // [x,x] = 0 for even basis elements (anticommutativity on the diagonal;
  // off-diagonal pairs satisfy it by the storage rule).
  for (std::size_t i = 0; i < d; ++i) {
    if (a.parity_of(i) == 0 && !a.entry(i, i).empty()) {
      for (const auto& [k, c] : a.entry(i, i)) {
        if (c != 0)
          return {false, "anticommutativity: [" + a.labels()[i] + "," +
                             a.labels()[i] + "] != 0"};
      }
    }
  }
  // parity compatibility
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      int p = (a.parity_of(i) + a.parity_of(j)) % 2;
      for (const auto& [k, c] : a.entry(i, j)) {
        if (c != 0 && a.parity_of(k) != p)
          return {false, "parity: [" + a.labels()[i] + "," + a.labels()[j] +
                             "] has component " + a.labels()[k]};
      }
    }
  }
  // super Jacobi over unordered triples
  auto ad = [&](std::size_t i, const SparseVec& v) {
    SparseVec out;
    Vec acc(d);
    for (const auto& [l, c] : v) {
      for (const auto& [k, e] : a.basis_bracket(i, l)) acc[k] += c * e;
    }
    for (std::size_t k = 0; k < d; ++k)
      if (acc[k] != 0) out.emplace_back(k, acc[k]);
    return out;
  };
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      for (std::size_t k = j; k < d; ++k) {
        Vec acc(d);
        auto add = [&](std::size_t x, std::size_t y, std::size_t z) {
          // (-1)^{p_x p_z} [b_x,[b_y,b_z]]
          Rat s = (a.parity_of(x) && a.parity_of(z)) ? -1 : 1;
          for (const auto& [l, c] : ad(x, a.basis_bracket(y, z)))
            acc[l] += s * c;
        };
        add(i, j, k);
        add(j, k, i);
        add(k, i, j);
        for (std::size_t l = 0; l < d; ++l) {
          if (acc[l] != 0)
            return {false, "jacobi: (" + a.labels()[i] + "," + a.labels()[j] +
                               "," + a.labels()[k] + ")"};
        }
      }
    }
  }
  return {};
}

namespace {

struct ClosureOps {
  const SuperAlgebra& a;
  ClosureMode mode;

  bool add(Subspace& s, Vec v) const {
    if (mode == ClosureMode::graded) {
      Vec even(a.dim()), odd(a.dim());
      for (std::size_t i = 0; i < a.dim(); ++i)
        (a.parity_of(i) ? odd : even)[i] = v[i];
      bool grew = s.insert(std::move(even));
      grew = s.insert(std::move(odd)) || grew;
      return grew;
    }
    return s.insert(std::move(v));
  }
};

std::vector<Vec> new_rows(const Subspace& s, const std::set<std::size_t>& old_pivots) {
  std::vector<Vec> out;
  for (std::size_t r = 0; r < s.dim(); ++r) {
    if (!old_pivots.count(s.pivots()[r])) out.push_back(s.rows()[r]);
  }
  return out;
}

}  // namespace

Subspace generated_subalgebra(const std::vector<Element>& seeds, ClosureMode mode,
                              ClosureTrace* trace) {
  if (seeds.empty()) throw usage_error("generated_subalgebra: no seeds");
  const SuperAlgebra& a = *seeds.front().alg;
  for (const auto& s : seeds) {
    if (s.alg != &a) throw usage_error("generated_subalgebra: mixed algebras");
  }
  ClosureOps ops{a, mode};
  Subspace span(a.dim());
  for (const auto& s : seeds) ops.add(span, s.c);
  if (trace) trace->dims_per_round.push_back(span.dim());
  std::vector<Vec> frontier = span.rows();
  while (!frontier.empty()) {
    std::set<std::size_t> old_pivots(span.pivots().begin(), span.pivots().end());
    const std::vector<Vec> current = span.rows();
    for (const auto& f : frontier) {
      for (const auto& r : current) {
        ops.add(span, bracket_vec(a, f, r));
        ops.add(span, bracket_vec(a, r, f));
      }
    }
    if (trace) trace->dims_per_round.push_back(span.dim());
    frontier = new_rows(span, old_pivots);
  }
  return span;
}

Subspace generated_ideal(const std::vector<Element>& seeds) {
  if (seeds.empty()) throw usage_error("generated_ideal: no seeds");
  const SuperAlgebra& a = *seeds.front().alg;
  for (const auto& s : seeds) {
    if (s.alg != &a) throw usage_error("generated_ideal: mixed algebras");
  }
  Subspace span(a.dim());
  for (const auto& s : seeds) span.insert(s.c);
  std::vector<Vec> frontier = span.rows();
  while (!frontier.empty()) {
    std::set<std::size_t> old_pivots(span.pivots().begin(), span.pivots().end());
    for (const auto& f : frontier) {
      for (std::size_t b = 0; b < a.dim(); ++b) {
        Vec e(a.dim());
        e[b] = 1;
        span.insert(bracket_vec(a, e, f));
        span.insert(bracket_vec(a, f, e));
      }
    }
    frontier = new_rows(span, old_pivots);
  }
  return span;
}

namespace {

Subspace parity_span(const SuperAlgebra& a, int p) {
  Subspace s(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.parity_of(i) == p) {
      Vec v(a.dim());
      v[i] = 1;
      s.insert(std::move(v));
    }
  }
  return s;
}

}  // namespace

Subspace even_part(const SuperAlgebra& a) { return parity_span(a, 0); }
Subspace odd_part(const SuperAlgebra& a) { return parity_span(a, 1); }

Subspace z_layer(const SuperAlgebra& a, int k) {
  if (!a.has_z_degree()) throw usage_error("algebra has no z-grading");
  Subspace s(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.z_degree()[i] == k) {
      Vec v(a.dim());
      v[i] = 1;
      s.insert(std::move(v));
    }
  }
  return s;
}

std::string table_to_json(const SuperAlgebra& a) {
  nlohmann::ordered_json j;
  j["name"] = a.name();
  j["dim"] = a.dim();
  j["parity"] = a.parity();
  j["labels"] = a.labels();
  auto entries = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t jj = i; jj < a.dim(); ++jj) {
      const auto& e = a.entry(i, jj);
      if (e.empty()) continue;
      auto terms = nlohmann::ordered_json::array();
      for (const auto& [k, c] : e) {
        terms.push_back({k, c.get_num().get_str(), c.get_den().get_str()});
      }
      entries.push_back({i, jj, terms});
    }
  }
  j["entries"] = std::move(entries);
  return j.dump();
}

std::shared_ptr<SuperAlgebra> table_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
  std::vector<int> parity = j.at("parity").get<std::vector<int>>();
  if (j.at("dim").get<std::size_t>() != labels.size())
    throw usage_error("table_from_json: dim mismatch");
  auto a = std::make_shared<SuperAlgebra>(j.at("name").get<std::string>(),
                                          std::move(labels), std::move(parity));
  for (const auto& ent : j.at("entries")) {
    std::size_t i = ent.at(0), jj = ent.at(1);
    SparseVec v;
    for (const auto& t : ent.at(2)) {
      Rat c(mpz_class(t.at(1).get<std::string>()),
            mpz_class(t.at(2).get<std::string>()));
      c.canonicalize();
      v.emplace_back(t.at(0).get<std::size_t>(), c);
    }
    a->set_entry(i, jj, std::move(v));
  }
  AxiomReport rep = check_axioms(*a);
  if (!rep.ok) throw usage_error("table_from_json: invalid table: " + rep.detail);
  return a;
}

}  // namespace sgen
