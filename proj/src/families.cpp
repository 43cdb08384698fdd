#include "sgen/families.hpp"

#include <sstream>

#include "sgen/cartan.hpp"
#include "sgen/classical.hpp"

namespace sgen {

namespace {

const char* kind_token(Kind k) {
  switch (k) {
    case Kind::A: return "A";
    case Kind::B: return "B";
    case Kind::C: return "C";
    case Kind::D: return "D";
    case Kind::P: return "P";
    case Kind::Q: return "Q";
    case Kind::W: return "W";
    case Kind::S: return "S";
    case Kind::St: return "St";
    case Kind::H: return "H";
  }
  return "?";
}

}  // namespace

std::string FamilyId::selector() const {
  std::ostringstream os;
  os << kind_token(kind);
  for (int p : params) os << " " << p;
  return os.str();
}

std::string FamilyId::display() const {
  std::ostringstream os;
  os << (kind == Kind::St ? "S~" : kind_token(kind)) << "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) os << ",";
    os << params[i];
  }
  os << ")";
  return os.str();
}

void validate_params(const FamilyId& id) {
  const auto& p = id.params;
  auto fail = [&](const std::string& msg) {
    throw usage_error(id.selector() + ": " + msg);
  };
  switch (id.kind) {
    case Kind::A:
      if (p.size() != 2) fail("expects m n");
      if (p[0] < 0 || p[1] < 0 || (p[0] == 0 && p[1] == 0))
        fail("requires m,n >= 0 and not both 0");
      break;
    case Kind::B:
      if (p.size() != 2) fail("expects m n");
      if (p[0] < 0 || p[1] < 1) fail("requires m >= 0, n > 0");
      break;
    case Kind::C:
      if (p.size() != 1) fail("expects n");
      if (p[0] < 2) fail("requires n >= 2");
      break;
    case Kind::D:
      if (p.size() != 2) fail("expects m n");
      if (p[0] < 2 || p[1] < 1) fail("requires m >= 2, n > 0");
      break;
    case Kind::P:
    case Kind::Q:
      if (p.size() != 1) fail("expects n");
      if (p[0] < 2) fail("requires n >= 2");
      break;
    case Kind::W:
      if (p.size() != 1) fail("expects n");
      if (p[0] < 3) fail("requires n >= 3");
      break;
    case Kind::S:
      if (p.size() != 1) fail("expects n");
      if (p[0] < 4) fail("requires n >= 4");
      break;
    case Kind::St:
      if (p.size() != 1) fail("expects 2m");
      if (p[0] < 4 || p[0] % 2 != 0) fail("requires even 2m >= 4");
      break;
    case Kind::H:
      if (p.size() != 1) fail("expects n");
      if (p[0] < 5) fail("requires n >= 5");
      break;
  }
}

std::optional<FamilyId> parse_selector(const std::vector<std::string>& tokens) {
  if (tokens.empty()) return std::nullopt;
  Kind kind;
  const std::string& t = tokens[0];
  if (t == "A") kind = Kind::A;
  else if (t == "B") kind = Kind::B;
  else if (t == "C") kind = Kind::C;
  else if (t == "D") kind = Kind::D;
  else if (t == "P") kind = Kind::P;
  else if (t == "Q") kind = Kind::Q;
  else if (t == "W") kind = Kind::W;
  else if (t == "S") kind = Kind::S;
  else if (t == "St") kind = Kind::St;
  else if (t == "H") kind = Kind::H;
  else return std::nullopt;
  FamilyId id{kind, {}};
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(tokens[i], &pos);
      if (pos != tokens[i].size()) throw std::invalid_argument("trailing");
      id.params.push_back(v);
    } catch (const std::exception&) {
      throw usage_error("bad parameter '" + tokens[i] + "' for family " + t);
    }
  }
  validate_params(id);
  return id;
}

BuiltFamily build_family(const FamilyId& id) {
  validate_params(id);
  switch (id.kind) {
    case Kind::A: return build_A(id.params[0], id.params[1]);
    case Kind::B: return build_osp(2 * id.params[0] + 1, 2 * id.params[1], id);
    case Kind::C: return build_osp(2, 2 * id.params[0] - 2, id);
    case Kind::D: return build_osp(2 * id.params[0], 2 * id.params[1], id);
    case Kind::P: return build_P(id.params[0]);
    case Kind::Q: return build_Q(id.params[0]);
    case Kind::W: return build_W(id.params[0]);
    case Kind::S: return build_S(id.params[0]);
    case Kind::St: return build_S_tilde(id.params[0]);
    case Kind::H: return build_H(id.params[0]);
  }
  throw usage_error("unreachable family kind");
}

namespace {

std::size_t osp_dim(int M, int twoN) {
  std::size_t N = twoN / 2;
  return std::size_t(M) * (M - 1) / 2 + N * (twoN + 1) + std::size_t(M) * twoN;
}

}  // namespace

std::size_t family_dimension_formula(const FamilyId& id) {
  const auto& p = id.params;
  switch (id.kind) {
    case Kind::A: {
      std::size_t d = std::size_t(p[0] + p[1] + 2) * (p[0] + p[1] + 2) - 1;
      return p[0] == p[1] ? d - 1 : d;
    }
    case Kind::B: return osp_dim(2 * p[0] + 1, 2 * p[1]);
    case Kind::C: return osp_dim(2, 2 * p[0] - 2);
    case Kind::D: return osp_dim(2 * p[0], 2 * p[1]);
    case Kind::P: return 2 * std::size_t(p[0] + 1) * (p[0] + 1) - 1;
    case Kind::Q: return 2 * std::size_t(p[0] + 1) * (p[0] + 1) - 2;
    case Kind::W: return std::size_t(p[0]) << p[0];
    case Kind::S:
    case Kind::St: return ((std::size_t(p[0]) - 1) << p[0]) + 1;
    case Kind::H: return (std::size_t(1) << p[0]) - 2;
  }
  throw usage_error("unreachable family kind");
}

std::vector<CatalogEntry> family_catalog() {
  return {
      {"A m n", "m,n >= 0, not both 0 (m = n: quotient variant)"},
      {"B m n", "m >= 0, n > 0"},
      {"C n", "n >= 2"},
      {"D m n", "m >= 2, n > 0"},
      {"P n", "n >= 2"},
      {"Q n", "n >= 2"},
      {"W n", "n >= 3"},
      {"S n", "n >= 4"},
      {"St 2m", "2m >= 4 even"},
      {"H n", "n >= 5"},
  };
}

std::string catalog_out_of_scope_note() {
  return "out of scope: D(2,1;a), G(3), F(4) (no explicit realization)";
}

std::vector<FamilyId> acceptance_matrix() {
  return {
      {Kind::A, {1, 0}}, {Kind::A, {2, 1}}, {Kind::A, {1, 1}},
      {Kind::B, {0, 1}}, {Kind::B, {1, 1}}, {Kind::C, {2}},
      {Kind::D, {2, 1}}, {Kind::P, {2}},    {Kind::P, {3}},
      {Kind::Q, {2}},    {Kind::Q, {3}},    {Kind::W, {3}},
      {Kind::W, {4}},    {Kind::S, {4}},    {Kind::St, {4}},
      {Kind::H, {5}},    {Kind::H, {6}},
  };
}

}  // namespace sgen
