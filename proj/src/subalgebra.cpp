#include "sgen/subalgebra.hpp"

#include <algorithm>

namespace sgen {

SpanSolver::SpanSolver(std::vector<Vec> basis_rows, std::size_t ambient_dim)
    : ambient_(ambient_dim), basis_(std::move(basis_rows)) {
  std::size_t k = basis_.size();
  reduced_ = basis_;
  transform_.assign(k, Vec(k));
  for (std::size_t i = 0; i < k; ++i) transform_[i][i] = 1;
  // Gauss-Jordan on [basis | I]
  std::size_t lead = 0;
  for (std::size_t col = 0; col < ambient_ && lead < k; ++col) {
    std::size_t piv = k;
    for (std::size_t r = lead; r < k; ++r) {
      if (reduced_[r][col] != 0) { piv = r; break; }
    }
    if (piv == k) continue;
    std::swap(reduced_[lead], reduced_[piv]);
    std::swap(transform_[lead], transform_[piv]);
    Rat inv = reduced_[lead][col];
    for (auto& x : reduced_[lead]) x /= inv;
    for (auto& x : transform_[lead]) x /= inv;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == lead || reduced_[r][col] == 0) continue;
      Rat f = reduced_[r][col];
      for (std::size_t c = 0; c < ambient_; ++c)
        reduced_[r][c] -= f * reduced_[lead][c];
      for (std::size_t c = 0; c < k; ++c)
        transform_[r][c] -= f * transform_[lead][c];
    }
    pivots_.push_back(col);
    ++lead;
  }
  if (lead != k) throw usage_error("SpanSolver: rows are dependent");
}

std::optional<Vec> SpanSolver::express(const Vec& v) const {
  if (v.size() != ambient_) throw dimension_error("express: length mismatch");
  Vec residue = v;
  Vec rc(basis_.size());  // coefficients over reduced_ rows
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    Rat f = residue[pivots_[r]];
    if (f == 0) continue;
    rc[r] = f;
    for (std::size_t c = 0; c < ambient_; ++c) residue[c] -= f * reduced_[r][c];
  }
  for (const auto& x : residue) {
    if (x != 0) return std::nullopt;
  }
  Vec out(basis_.size());
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    if (rc[r] == 0) continue;
    for (std::size_t c = 0; c < basis_.size(); ++c)
      out[c] += rc[r] * transform_[r][c];
  }
  return out;
}

std::shared_ptr<SuperAlgebra> subalgebra_with_basis(
    const SuperAlgebra& ambient, const std::vector<Element>& basis,
    const std::vector<std::string>& labels, const std::string& name) {
  if (basis.size() != labels.size())
    throw usage_error("subalgebra_with_basis: label count mismatch");
  std::vector<Vec> rows;
  std::vector<int> parity;
  for (const auto& b : basis) {
    if (b.alg != &ambient) throw usage_error("basis element in wrong algebra");
    int p = b.homogeneous_parity();
    if (p < 0) throw usage_error("basis element not parity-homogeneous");
    parity.push_back(p);
    rows.push_back(b.c);
  }
  SpanSolver solver(std::move(rows), ambient.dim());
  auto alg = std::make_shared<SuperAlgebra>(name, labels, parity);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      Element br = bracket(basis[i], basis[j]);
      auto coeffs = solver.express(br.c);
      if (!coeffs)
        throw usage_error(name + ": span not bracket-closed at (" + labels[i] +
                          "," + labels[j] + ")");
      SparseVec sv;
      for (std::size_t k = 0; k < coeffs->size(); ++k) {
        if ((*coeffs)[k] != 0) sv.emplace_back(k, (*coeffs)[k]);
      }
      alg->set_entry(i, j, std::move(sv));
    }
  }
  return alg;
}

bool is_ideal(const SuperAlgebra& a, const Subspace& k) {
  if (k.ambient_dim() != a.dim()) throw dimension_error("ideal ambient mismatch");
  for (const auto& row : k.rows()) {
    Element x(a, row);
    for (std::size_t b = 0; b < a.dim(); ++b) {
      if (!k.contains(bracket(Element::basis(a, b), x).c)) return false;
    }
  }
  return true;
}

namespace {

QuotientMap make_quotient(AlgebraPtr parent, const Subspace& k,
                          std::vector<Element> section,
                          const std::vector<std::string>& labels,
                          const std::string& name) {
  const SuperAlgebra& p = *parent;
  if (!is_ideal(p, k)) throw usage_error("quotient: subspace is not an ideal");
  std::size_t q = section.size();
  if (q + k.dim() != p.dim())
    throw usage_error("quotient: section size does not match codimension");
  std::vector<Vec> stacked;
  std::vector<int> parity;
  for (const auto& s : section) {
    int pr = s.homogeneous_parity();
    if (pr < 0) throw usage_error("quotient: section element not homogeneous");
    parity.push_back(pr);
    stacked.push_back(s.c);
  }
  for (const auto& r : k.rows()) stacked.push_back(r);
  auto solver = std::make_shared<SpanSolver>(std::move(stacked), p.dim());

  auto alg = std::make_shared<SuperAlgebra>(name, labels, parity);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = i; j < q; ++j) {
      Element br = bracket(section[i], section[j]);
      auto coeffs = solver->express(br.c);
      if (!coeffs) throw usage_error("quotient: bracket escaped the parent span");
      SparseVec sv;
      for (std::size_t l = 0; l < q; ++l) {
        if ((*coeffs)[l] != 0) sv.emplace_back(l, (*coeffs)[l]);
      }
      alg->set_entry(i, j, std::move(sv));
    }
  }
  QuotientMap m;
  m.parent = std::move(parent);
  m.kernel = k;
  m.section = std::move(section);
  m.quotient = std::move(alg);
  m.solver = std::move(solver);
  return m;
}

}  // namespace

Element QuotientMap::project(const Element& x) const {
  if (x.alg != parent.get()) throw usage_error("project: wrong algebra");
  auto coeffs = solver->express(x.c);
  if (!coeffs) throw usage_error("project: element outside parent span");
  Vec out(quotient->dim());
  std::copy(coeffs->begin(), coeffs->begin() + quotient->dim(), out.begin());
  return Element(*quotient, std::move(out));
}

QuotientMap quotient_by_ideal(AlgebraPtr a, const Subspace& k) {
  const SuperAlgebra& p = *a;
  Subspace probe = k;
  std::vector<Element> section;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < p.dim() && probe.dim() < p.dim(); ++i) {
    Vec v(p.dim());
    v[i] = 1;
    if (probe.insert(v)) {
      section.push_back(Element::basis(p, i));
      labels.push_back(p.labels()[i]);
    }
  }
  return make_quotient(std::move(a), k, std::move(section), labels,
                       p.name() + "/ideal");
}

QuotientMap quotient_with_section(AlgebraPtr a, const Subspace& k,
                                  const std::vector<Element>& section,
                                  const std::vector<std::string>& labels,
                                  const std::string& name) {
  return make_quotient(std::move(a), k, section, labels, name);
}

}  // namespace sgen
