#include "sgen/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace sgen {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json weight_json(const Weight& w) {
  auto a = ordered_json::array();
  for (const auto& v : w) a.push_back(to_string(v));
  return a;
}

ordered_json vec_json(const Vec& v) {
  auto a = ordered_json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

ordered_json certificate_obj(const Certificate& c) {
  ordered_json j;
  j["family"] = c.family.display();
  j["params"] = c.family.params;
  j["recipe"] = c.recipe;
  auto ings = ordered_json::array();
  for (const auto& ing : c.ingredients) {
    ordered_json o;
    o["role"] = ing.role;
    o["weight"] = weight_json(ing.weight);
    o["element"] = ing.element;
    ings.push_back(std::move(o));
  }
  j["ingredients"] = std::move(ings);
  j["h_coords"] = vec_json(c.h_coords);
  j["rounds"] = c.rounds;
  j["dims"] = c.dims;
  j["final_dim"] = c.final_dim;
  j["target_dim"] = c.target_dim;
  j["verdict"] = c.generated ? "generated" : "not-generated";
  j["attempts"] = c.attempts;
  j["x0_balanced"] = c.x0_balanced;
  return j;
}

ordered_json family_run_obj(const FamilyRun& r) {
  ordered_json j;
  j["selector"] = r.id.selector();
  j["display"] = r.id.display();
  j["status"] = r.ok() ? "ok" : "failed";
  j["dim"] = r.dim;
  j["axioms"] = {{"ok", r.axioms_ok}, {"detail", r.axiom_detail}};
  j["error"] = r.error;
  j["certificate"] = certificate_obj(r.cert);
  return j;
}

struct WeightRow {
  Weight weight;
  int parity;
  int z_degree;  // meaningful only when has_z
  std::vector<std::string> labels;
};

std::vector<WeightRow> weight_rows(const BuiltFamily& f) {
  const SuperAlgebra& a = *f.alg;
  CartanFrame frame = standard_cartan(a);
  std::vector<WeightRow> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto w = basis_weight(a, frame, i);
    if (!w)
      throw usage_error(a.name() + ": " + a.labels()[i] +
                        " is not a frame eigenvector");
    int z = a.has_z_degree() ? a.z_degree()[i] : 0;
    auto it = std::find_if(rows.begin(), rows.end(), [&](const WeightRow& r) {
      return r.weight == *w && r.parity == a.parity_of(i) && r.z_degree == z;
    });
    if (it == rows.end())
      rows.push_back({*w, a.parity_of(i), z, {a.labels()[i]}});
    else
      it->labels.push_back(a.labels()[i]);
  }
  std::sort(rows.begin(), rows.end(), [](const WeightRow& x, const WeightRow& y) {
    if (x.z_degree != y.z_degree) return x.z_degree < y.z_degree;
    if (x.parity != y.parity) return x.parity < y.parity;
    return x.weight < y.weight;
  });
  return rows;
}

ordered_json weight_table_obj(const BuiltFamily& f) {
  const SuperAlgebra& a = *f.alg;
  ordered_json j;
  j["family"] = f.id.display();
  j["frame_labels"] = a.cartan_labels();
  auto entries = ordered_json::array();
  for (const auto& r : weight_rows(f)) {
    ordered_json o;
    o["weight"] = weight_json(r.weight);
    o["parity"] = r.parity;
    if (a.has_z_degree()) o["z_degree"] = r.z_degree;
    o["basis_labels"] = r.labels;
    entries.push_back(std::move(o));
  }
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace

FamilyRun run_family(const FamilyId& id, const RunOptions& opt) {
  validate_params(id);
  if (!opt.allow_large && family_dimension_formula(id) > 400)
    throw usage_error(id.display() + ": dimension " +
                      std::to_string(family_dimension_formula(id)) +
                      " exceeds the cap of 400 (pass --allow-large)");
  FamilyRun r;
  r.id = id;
  BuiltFamily f = build_family(id);
  r.built = true;
  r.dim = f.alg->dim();
  AxiomReport ax = check_axioms(*f.alg);
  r.axioms_ok = ax.ok;
  r.axiom_detail = ax.detail;
  if (!ax.ok) {
    r.error = "axiom check failed: " + ax.detail;
    return r;
  }
  try {
    CartanFrame frame = standard_cartan(*f.alg);
    decompose(*f.alg, frame);
    GeneratorCandidate cand = make_candidate(f);
    r.cert = search_fallback(f, cand, opt.budget, opt.mode);
    if (!r.cert.generated)
      r.error = "closure reached dim " + std::to_string(r.cert.final_dim) +
                " of " + std::to_string(r.cert.target_dim);
  } catch (const usage_error& e) {
    r.error = e.what();
  }
  return r;
}

std::string certificate_json(const Certificate& c) {
  return certificate_obj(c).dump(2) + "\n";
}

std::string family_run_json(const FamilyRun& r) {
  return family_run_obj(r).dump(2) + "\n";
}

std::string family_run_text(const FamilyRun& r) {
  std::ostringstream os;
  os << r.id.display() << ": ";
  if (!r.error.empty()) {
    os << "FAILED (" << r.error << ")\n";
    return os.str();
  }
  os << r.cert.recipe << ", dim " << r.cert.final_dim << "/" << r.cert.target_dim
     << ", rounds " << r.cert.rounds << ", attempts " << r.cert.attempts << ", "
     << (r.cert.generated ? "generated" : "not-generated") << "\n";
  return os.str();
}

namespace {

std::vector<FamilyRun> sorted_runs(std::vector<FamilyRun> runs) {
  std::sort(runs.begin(), runs.end(), [](const FamilyRun& a, const FamilyRun& b) {
    return a.id.selector() < b.id.selector();
  });
  return runs;
}

}  // namespace

std::string run_report_json(std::vector<FamilyRun> runs) {
  runs = sorted_runs(std::move(runs));
  ordered_json j;
  j["tool"] = "sgen";
  j["version"] = kToolVersion;
  auto fams = ordered_json::array();
  std::size_t ok = 0;
  for (const auto& r : runs) {
    fams.push_back(family_run_obj(r));
    if (r.ok()) ++ok;
  }
  j["families"] = std::move(fams);
  j["ok_count"] = ok;
  j["total"] = runs.size();
  return j.dump(2) + "\n";
}

std::string run_report_text(std::vector<FamilyRun> runs) {
  runs = sorted_runs(std::move(runs));
  std::ostringstream os;
  std::size_t ok = 0;
  for (const auto& r : runs) {
    os << family_run_text(r);
    if (r.ok()) ++ok;
  }
  os << ok << "/" << runs.size() << " families certified\n";
  return os.str();
}

std::string weight_table_json(const BuiltFamily& f) {
  return weight_table_obj(f).dump(2) + "\n";
}

std::string weight_table_text(const BuiltFamily& f) {
  const SuperAlgebra& a = *f.alg;
  std::ostringstream os;
  os << f.id.display() << ", dim " << a.dim() << "\n";
  os << "frame:";
  for (const auto& l : a.cartan_labels()) os << " " << l;
  os << "\n";
  for (const auto& r : weight_rows(f)) {
    os << "weight (";
    for (std::size_t k = 0; k < r.weight.size(); ++k) {
      if (k) os << ",";
      os << to_string(r.weight[k]);
    }
    os << ") parity " << r.parity;
    if (a.has_z_degree()) os << " degree " << r.z_degree;
    os << ":";
    for (const auto& l : r.labels) os << " " << l;
    os << "\n";
  }
  return os.str();
}

std::string fixture_json(const BuiltFamily& f) {
  ordered_json j;
  j["family"] = f.id.display();
  j["table"] = ordered_json::parse(table_to_json(*f.alg));
  j["weight_table"] = weight_table_obj(f);
  return j.dump(2) + "\n";
}

std::string catalog_text() {
  std::ostringstream os;
  for (const auto& e : family_catalog())
    os << e.selector << "  (" << e.constraints << ")\n";
  os << catalog_out_of_scope_note() << "\n";
  return os.str();
}

std::string catalog_json() {
  ordered_json j;
  auto fams = ordered_json::array();
  for (const auto& e : family_catalog())
    fams.push_back({{"selector", e.selector}, {"constraints", e.constraints}});
  j["families"] = std::move(fams);
  j["note"] = catalog_out_of_scope_note();
  return j.dump(2) + "\n";
}

}  // namespace sgen
