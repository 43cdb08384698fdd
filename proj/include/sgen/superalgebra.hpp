#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgen/linalg.hpp"
#include "sgen/rational.hpp"

namespace sgen {

struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using SparseVec = std::vector<std::pair<std::size_t, Rat>>;

/// Finite-dimensional Z2-graded algebra given by a named basis, a parity per
/// basis element and bracket structure constants. The table is stored for
/// i <= j only; the (j,i) value follows from super anticommutativity.
class SuperAlgebra {
 public:
  SuperAlgebra(std::string name, std::vector<std::string> labels,
               std::vector<int> parity);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& parity() const { return parity_; }
  int parity_of(std::size_t i) const { return parity_[i]; }

  bool has_z_degree() const { return !z_degree_.empty(); }
  const std::vector<int>& z_degree() const { return z_degree_; }
  void set_z_degree(std::vector<int> z, bool graded);
  bool z_graded() const { return z_graded_; }

  /// Sets [b_i, b_j] for i <= j.
  void set_entry(std::size_t i, std::size_t j, SparseVec value);
  const SparseVec& entry(std::size_t i, std::size_t j) const;  // i <= j

  /// [b_i, b_j] for arbitrary i, j (sign rule applied when i > j).
  SparseVec basis_bracket(std::size_t i, std::size_t j) const;

  std::size_t index_of(const std::string& label) const;

  // Standard Cartan frame metadata, populated by family builders.
  bool has_cartan() const { return !cartan_coords_.empty(); }
  const std::vector<Vec>& cartan_coords() const { return cartan_coords_; }
  const std::vector<std::string>& cartan_labels() const { return cartan_labels_; }
  void set_cartan(std::vector<Vec> coords, std::vector<std::string> labels);

 private:
  std::size_t pair_index(std::size_t i, std::size_t j) const {
    return i * dim_ - i * (i - 1) / 2 + (j - i);
  }

  std::string name_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<int> parity_;
  std::vector<int> z_degree_;
  bool z_graded_ = true;
  std::vector<SparseVec> table_;
  std::vector<Vec> cartan_coords_;
  std::vector<std::string> cartan_labels_;
};

using AlgebraPtr = std::shared_ptr<const SuperAlgebra>;

/// Coefficient vector over an algebra's basis.
struct Element {
  const SuperAlgebra* alg = nullptr;
  Vec c;

  Element() = default;
  Element(const SuperAlgebra& a, Vec coeffs);

  static Element zero(const SuperAlgebra& a);
  static Element basis(const SuperAlgebra& a, std::size_t i);

  bool is_zero() const;
  /// -1 for zero or mixed-parity elements, else 0/1.
  int homogeneous_parity() const;

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Rat& s) const;
  bool operator==(const Element& o) const { return alg == o.alg && c == o.c; }

  std::string pretty() const;  // e.g. "e13+e42-2*e11"
};

Element bracket(const Element& x, const Element& y);

struct AxiomReport {
  bool ok = true;
  std::string detail;  // names the first violating pair/triple
};

/// Verifies anticommutativity constraints on the stored table, parity
/// compatibility and the super Jacobi identity over all basis triples.
AxiomReport check_axioms(const SuperAlgebra& a);

enum class ClosureMode { ungraded, graded };

struct ClosureTrace {
  std::vector<std::size_t> dims_per_round;  // dim after each enlargement round
};

/// Least bracket-closed subspace containing the seeds.
Subspace generated_subalgebra(const std::vector<Element>& seeds,
                              ClosureMode mode = ClosureMode::ungraded,
                              ClosureTrace* trace = nullptr);

/// Least subspace containing the seeds closed under bracketing with every
/// basis element of the ambient algebra.
Subspace generated_ideal(const std::vector<Element>& seeds);

Subspace even_part(const SuperAlgebra& a);
Subspace odd_part(const SuperAlgebra& a);

/// Subspace spanned by basis elements of one z-degree layer.
Subspace z_layer(const SuperAlgebra& a, int k);

std::string table_to_json(const SuperAlgebra& a);
/// Parses the JSON structure-table document and re-validates all invariants.
std::shared_ptr<SuperAlgebra> table_from_json(const std::string& text);

}  // namespace sgen
