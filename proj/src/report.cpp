#include "regdec/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "regdec/error.hpp"

namespace regdec {

namespace {

using Json = nlohmann::ordered_json;

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json to_object(const ScenarioReport& r) {
  Json j;
  j["scenario"] = r.scenario;
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  j["field"] = r.field;
  j["group"] = r.group;
  j["minimal"] = opt(r.minimal);
  j["det_is_zero"] = opt(r.det_is_zero);
  j["det"] = opt(r.det);

  Json c;
  const auto& cert = r.certificates;
  c["equal_columns"] =
      cert.equal_columns ? Json::array({cert.equal_columns->first, cert.equal_columns->second}) : Json(nullptr);
  c["radical_order"] = opt(cert.radical_order);
  c["center_dimension"] = opt(cert.center_dimension);
  c["square_identity"] = opt(cert.square_identity);
  j["certificates"] = c;

  Json asserts = Json::array();
  for (const auto& a : r.assertions) {
    Json x;
    x["name"] = a.name;
    x["passed"] = a.passed;
    x["detail"] = a.detail;
    asserts.push_back(x);
  }
  j["assertions"] = asserts;
  j["notes"] = r.notes;
  j["aborted"] = opt(r.aborted);
  const auto v = r.verdict();
  j["conjecture_verdict"] = v.empty() ? Json(nullptr) : Json(v);
  j["status"] = r.passed() ? "ok" : "assertion-failed";
  return j;
}

}  // namespace

void ScenarioReport::check(std::string name, bool ok, std::string detail) {
  assertions.push_back({std::move(name), ok, std::move(detail)});
}

bool ScenarioReport::passed() const {
  if (aborted) return false;
  for (const auto& a : assertions)
    if (!a.passed) return false;
  return true;
}

std::string ScenarioReport::verdict() const {
  if (!minimal || !det_is_zero) return {};
  return *minimal == *det_is_zero ? "counterexample" : "consistent";
}

std::string to_json(const ScenarioReport& r, int indent) { return to_object(r).dump(indent); }

std::string to_json(const std::vector<ScenarioReport>& rs, int indent) {
  Json arr = Json::array();
  for (const auto& r : rs) arr.push_back(to_object(r));
  return arr.dump(indent);
}

std::string to_text(const ScenarioReport& r) {
  std::ostringstream os;
  os << r.scenario;
  for (const auto& [k, v] : r.parameters) os << " " << k << "=" << v;
  os << "\n";
  if (!r.field.empty()) os << "  field: " << r.field << "\n";
  if (!r.group.empty()) os << "  group: " << r.group << "\n";
  auto yn = [](const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "n/a"; };
  if (r.minimal) os << "  minimal: " << yn(r.minimal) << "\n";
  if (r.det) os << "  det: " << *r.det << (r.det_is_zero.value_or(false) ? " (zero)" : " (nonzero)") << "\n";
  const auto& c = r.certificates;
  if (c.equal_columns) os << "  equal columns: " << c.equal_columns->first << " and " << c.equal_columns->second << "\n";
  if (c.radical_order) os << "  radical order: " << *c.radical_order << "\n";
  if (c.center_dimension) os << "  center dimension: " << *c.center_dimension << "\n";
  if (c.square_identity) os << "  M^2 = |G| I: " << yn(c.square_identity) << "\n";
  for (const auto& a : r.assertions)
    os << "  [" << (a.passed ? "ok" : "FAILED") << "] " << a.name << (a.detail.empty() ? "" : ": " + a.detail) << "\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  if (r.aborted) os << "  aborted: " << *r.aborted << "\n";
  const auto v = r.verdict();
  if (!v.empty()) os << "  verdict: " << v << "\n";
  return os.str();
}

std::vector<std::string> dump_matrices(const std::vector<ScenarioReport>& rs, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ParameterError("cannot create dump directory " + dir + ": " + ec.message());
  std::vector<std::string> written;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const auto& r = rs[i];
    for (const auto& [stem, m] : r.matrices) {
      auto base = r.scenario;
      std::replace(base.begin(), base.end(), '/', '-');
      auto name = base + (rs.size() > 1 ? "-" + std::to_string(i) : "") + "-" + stem + ".csv";
      const auto path = (fs::path(dir) / name).string();
      std::ofstream out(path);
      if (!out) throw ParameterError("cannot write " + path);
      write_csv(out, m);
      written.push_back(path);
    }
  }
  return written;
}

}  // namespace regdec
