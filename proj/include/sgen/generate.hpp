#pragma once

#include <functional>

#include "sgen/families.hpp"
#include "sgen/modules.hpp"
#include "sgen/weights.hpp"

namespace sgen {

struct Ingredient {
  std::string role;  // e.g. "x1", "x-1", "x0", "z", "h", "odd-sum"
  Weight weight;     // empty when not a weight vector
  Element value;
};

struct GeneratorCandidate {
  const SuperAlgebra* alg = nullptr;
  std::string recipe;  // classical-case1 | classical-A11 | classical-P3 |
                       // classical-Qn | cartan-single | cartan-split
  Element element;
  Element h;     // separating Cartan summand
  Element rest;  // element - h, fixed across fallback retries
  std::vector<Ingredient> ingredients;
  std::vector<Weight> h_functionals;  // family h was chosen to separate
  /// Rebuilds the h summand with the k-th separating element from the
  /// deterministic enumeration; used by search_fallback.
  std::function<Element(std::size_t)> remake_h;
};

/// Ingredient snapshot that stays valid after the algebra is gone.
struct CertIngredient {
  std::string role;
  Weight weight;
  std::string element;
};

struct Certificate {
  FamilyId family;
  std::string recipe;
  std::vector<CertIngredient> ingredients;
  Vec h_coords;  // algebra coordinates of the h summand
  std::size_t rounds = 0;
  std::vector<std::size_t> dims;
  std::size_t final_dim = 0;
  std::size_t target_dim = 0;
  bool generated = false;
  std::size_t attempts = 1;
  bool x0_balanced = false;  // diagnostic, cartan recipes only
};

GeneratorCandidate classical_candidate(const BuiltFamily& f);

/// Local-part candidate for W/S/S~/H; throws usage_error when no
/// ingredient tuple passes the side conditions.
GeneratorCandidate cartan_candidate(const BuiltFamily& f);

GeneratorCandidate make_candidate(const BuiltFamily& f);

Certificate certify(const BuiltFamily& f, const GeneratorCandidate& c,
                    ClosureMode mode = ClosureMode::ungraded);

/// Retries with the next separating h from the deterministic enumeration,
/// up to `budget` total attempts.
Certificate search_fallback(const BuiltFamily& f, const GeneratorCandidate& base,
                            std::size_t budget,
                            ClosureMode mode = ClosureMode::ungraded);

/// True iff x projects nonzero onto every nonzero-weight space of the even
/// part.
bool is_balanced(const Element& x, const CartanFrame& frame);

/// exp(ad u) applied to y; u must be ad-nilpotent. Exact since the series
/// terminates.
Element ad_exp(const Element& u, const Element& y);

}  // namespace sgen
