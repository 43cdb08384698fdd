#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgen/superalgebra.hpp"

namespace sgen {

/// Commuting even elements acting diagonalizably; the basis of the algebra is
/// expected to consist of joint eigenvectors.
struct CartanFrame {
  const SuperAlgebra* alg = nullptr;
  std::vector<Vec> h;  // frame element coords in alg
  std::vector<std::string> labels;

  std::size_t rank() const { return h.size(); }
};

/// Frame recorded by the family builder; throws when the algebra carries none.
CartanFrame standard_cartan(const SuperAlgebra& a);

using Weight = std::vector<Rat>;

struct WeightSpace {
  Weight weight;
  std::vector<std::size_t> members;  // basis indices carrying this weight
};

struct WeightFilter {
  std::optional<int> parity;
  std::optional<int> z_degree;
};

/// Joint eigenvalue decomposition of the (filtered) basis under ad of the
/// frame. Every selected basis element is verified to be a joint eigenvector;
/// spaces are sorted by weight lexicographically.
std::vector<WeightSpace> decompose(const SuperAlgebra& a, const CartanFrame& f,
                                   const WeightFilter& filter = {});

/// Weight of one basis element under the frame, or nullopt when it is not a
/// joint eigenvector.
std::optional<Weight> basis_weight(const SuperAlgebra& a, const CartanFrame& f,
                                   std::size_t i);

struct OmegaResult {
  Vec coeffs;        // coordinates over the frame
  Element h;         // sum coeffs_k * h_k
  long shell;        // max-norm of the winning tuple
};

/// First integer tuple (deterministic max-norm shell order) whose pairings
/// with the functionals are pairwise distinct; with require_nonzero, pairings
/// with nonzero functionals must additionally be nonzero. `skip` discards the
/// first successful tuples, for fallback searches.
OmegaResult omega_element(const SuperAlgebra& a, const CartanFrame& f,
                          const std::vector<Weight>& functionals,
                          bool require_nonzero = true, std::size_t skip = 0);

Rat pair_weight(const Weight& w, const Vec& coeffs);

/// Splits x into its ad-h eigencomponents for the given distinct eigenvalues
/// by solving the Vandermonde system on iterated brackets. Throws when x has
/// a component outside the listed eigenvalues.
std::vector<Element> vandermonde_extract(const Element& h, const Element& x,
                                         const std::vector<Rat>& eigenvalues);

}  // namespace sgen
