#pragma once

#include "sgen/subalgebra.hpp"
#include "sgen/weights.hpp"

namespace sgen {

/// Least subspace containing the seeds and closed under bracketing with the
/// actor elements.
Subspace module_closure(const SuperAlgebra& a, const std::vector<Vec>& actors,
                        const std::vector<Vec>& seeds);

/// A frame-invariant module with a basis adapted to the frame weights.
struct AdaptedModule {
  std::vector<Vec> rows;       // basis, each a joint frame eigenvector
  std::vector<Weight> weights;  // per row
};

/// Intersects the module with every weight span of the algebra; the parts
/// must add up to the whole module (the frame acts diagonalizably).
AdaptedModule adapt_to_weights(const SuperAlgebra& a, const CartanFrame& f,
                               const Subspace& module);

/// Matrices of ad(actor) restricted to the module, over the adapted basis.
std::vector<Matrix> restricted_action(const SuperAlgebra& a,
                                      const std::vector<Vec>& actors,
                                      const AdaptedModule& m);

struct ModuleSplit {
  std::size_t commutant_dim = 0;
  /// Certified decomposition into irreducible submodules: one entry when the
  /// commutant is scalar, two when a 2-dimensional commutant splits over the
  /// rationals. Empty when undecided.
  std::vector<Subspace> components;
};

/// Counts irreducible summands through the commutant of the action. The
/// commutant is computed only over weight-compatible matrix positions, which
/// is no restriction since it must commute with the frame.
ModuleSplit analyze_module(const SuperAlgebra& a, const CartanFrame& f,
                           const std::vector<Vec>& actors,
                           const Subspace& module);

}  // namespace sgen
