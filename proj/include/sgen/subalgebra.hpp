#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sgen/superalgebra.hpp"

namespace sgen {

/// Expresses vectors in the span of a fixed independent row set.
class SpanSolver {
 public:
  SpanSolver(std::vector<Vec> basis_rows, std::size_t ambient_dim);

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<Vec>& basis_rows() const { return basis_; }

  /// Coefficients c with v = sum c_i * basis_i, or nullopt when v is outside.
  std::optional<Vec> express(const Vec& v) const;

 private:
  std::size_t ambient_;
  std::vector<Vec> basis_;
  std::vector<Vec> reduced_;    // RREF of basis
  std::vector<Vec> transform_;  // reduced = transform * basis
  std::vector<std::size_t> pivots_;
};

/// Builds a structure-constant algebra on a chosen independent basis of a
/// bracket-closed subspace of `ambient`. Every basis element must be
/// parity-homogeneous; brackets are verified to stay inside the span.
std::shared_ptr<SuperAlgebra> subalgebra_with_basis(
    const SuperAlgebra& ambient, const std::vector<Element>& basis,
    const std::vector<std::string>& labels, const std::string& name);

/// Quotient of `parent` by a (checked) ideal, with the induced bracket on a
/// chosen complement.
struct QuotientMap {
  AlgebraPtr parent;
  Subspace kernel{0};
  std::vector<Element> section;  // complement representatives in the parent
  std::shared_ptr<SuperAlgebra> quotient;
  std::shared_ptr<SpanSolver> solver;  // over [section; kernel]

  /// Image of a parent element in quotient coordinates.
  Element project(const Element& x) const;
};

/// Section = lexicographically first parent basis elements independent modulo
/// the kernel; labels inherited from the parent (coset convention).
QuotientMap quotient_by_ideal(AlgebraPtr a, const Subspace& k);

/// Same with an explicit section and labels.
QuotientMap quotient_with_section(AlgebraPtr a, const Subspace& k,
                                  const std::vector<Element>& section,
                                  const std::vector<std::string>& labels,
                                  const std::string& name);

/// True iff the subspace is an ideal of a.
bool is_ideal(const SuperAlgebra& a, const Subspace& k);

}  // namespace sgen
