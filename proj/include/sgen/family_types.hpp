#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sgen/subalgebra.hpp"
#include "sgen/superalgebra.hpp"

namespace sgen {

enum class Kind { A, B, C, D, P, Q, W, S, St, H };

struct FamilyId {
  Kind kind;
  std::vector<int> params;

  std::string selector() const;  // e.g. "A 1 1"
  std::string display() const;   // e.g. "A(1,1)"
  bool is_cartan() const {
    return kind == Kind::W || kind == Kind::S || kind == Kind::St || kind == Kind::H;
  }
};

/// A family build together with the metadata tests and the generator search
/// need: the ambient realization and, for the quotient families, the
/// quotient map.
struct BuiltFamily {
  FamilyId id;
  std::shared_ptr<SuperAlgebra> alg;
  std::shared_ptr<SuperAlgebra> ambient;  // gl ambient (classical only)
  std::vector<Element> basis_in_ambient;  // ambient coords per basis index
  std::shared_ptr<QuotientMap> quot;      // A(n,n) and Q(n) only
  std::vector<std::vector<std::size_t>> odd_components;  // known odd split
};

}  // namespace sgen
