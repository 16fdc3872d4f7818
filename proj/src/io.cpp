#include "qnetmax/io.hpp"

#include "qnetmax/error.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace qnetmax::io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorKind::ParseError, msg); }

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) fail("unknown field \"" + key + "\" in " + where);
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) fail("field \"" + field + "\" must be a number");
  return j.get<double>();
}

Eigen::Matrix4d real_matrix(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 4) fail("field \"" + field + "\" must be a 4x4 array");
  Eigen::Matrix4d m;
  for (int i = 0; i < 4; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != 4) fail("field \"" + field + "\" must be a 4x4 array");
    for (int k = 0; k < 4; ++k)
      m(i, k) = number(row[static_cast<std::size_t>(k)], field + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
  }
  return m;
}

MeasurementVector vector_field(const json& j, const std::string& field, std::vector<std::string>* warnings) {
  if (!j.is_array() || j.size() != 3) fail("field \"" + field + "\" must be a 3-vector");
  Vector3 v;
  for (int i = 0; i < 3; ++i) v(i) = number(j[static_cast<std::size_t>(i)], field);
  const double norm = v.norm();
  if (!(norm > 0.0)) fail("field \"" + field + "\" is a zero vector");
  if (std::abs(norm - 1.0) > 1e-6 && warnings) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "warning: settings vector \"%s\" has norm %.9g; normalized", field.c_str(), norm);
    warnings->push_back(buf);
  }
  return MeasurementVector::normalized(v);
}

std::string string_field(const json& j, const std::string& field) {
  if (!j.is_string()) fail("field \"" + field + "\" must be a string");
  return j.get<std::string>();
}

}  // namespace

TwoQubitState parse_state(const json& j) {
  if (!j.is_object()) fail("state must be a JSON object");
  std::optional<std::string> label;
  if (j.contains("label")) label = string_field(j["label"], "label");

  if (j.contains("family")) {
    const std::string family = string_field(j["family"], "family");
    auto with_label = [&](TwoQubitState s) { return label ? s.with_label(*label) : s; };
    if (family == "werner") {
      reject_unknown(j, {"family", "label", "v"}, "werner state");
      if (!j.contains("v")) fail("werner state needs field \"v\"");
      return with_label(werner_state(number(j["v"], "v")));
    }
    if (family == "colored") {
      reject_unknown(j, {"family", "label", "v", "lambda"}, "colored state");
      if (!j.contains("v") || !j.contains("lambda")) fail("colored state needs fields \"v\" and \"lambda\"");
      return with_label(colored_noise_state(number(j["v"], "v"), number(j["lambda"], "lambda")));
    }
    if (family == "bell") {
      reject_unknown(j, {"family", "label", "which"}, "bell state");
      if (!j.contains("which")) fail("bell state needs field \"which\"");
      const auto which = parse_bell_state(string_field(j["which"], "which"));
      if (!which) fail("field \"which\" must be one of phi+, phi-, psi+, psi-");
      return with_label(bell_state(*which));
    }
    fail("field \"family\" must be werner, colored or bell");
  }

  reject_unknown(j, {"label", "re", "im"}, "state");
  if (!j.contains("re")) fail("state needs field \"re\" (or \"family\")");
  const Eigen::Matrix4d re = real_matrix(j["re"], "re");
  const Eigen::Matrix4d im = j.contains("im") ? real_matrix(j["im"], "im") : Eigen::Matrix4d::Zero();
  Matrix4c m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = cx(re(r, c), im(r, c));
  return make_state(m, label);
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(path.string() + ": malformed JSON: " + e.what());
  }
}

TwoQubitState load_state_file(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  try {
    return parse_state(j);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

BilocalSettings parse_bilocal_settings(const json& j, std::vector<std::string>* warnings) {
  if (!j.is_object()) fail("settings must be a JSON object");
  reject_unknown(j, {"a0", "a1", "bA0", "bA1", "bC0", "bC1", "c0", "c1"}, "bilocal settings");
  BilocalSettings s = BilocalSettings::branciard();
  auto take = [&](const char* key, MeasurementVector& slot) {
    if (j.contains(key)) slot = vector_field(j[key], key, warnings);
  };
  take("a0", s.a0);
  take("a1", s.a1);
  take("bA0", s.bA0);
  take("bA1", s.bA1);
  take("bC0", s.bC0);
  take("bC1", s.bC1);
  take("c0", s.c0);
  take("c1", s.c1);
  return s;
}

StarSettings parse_star_settings(const json& j, std::vector<std::string>* warnings) {
  if (!j.is_object()) fail("settings must be a JSON object");
  reject_unknown(j, {"branches"}, "star settings");
  if (!j.contains("branches") || !j["branches"].is_array()) fail("star settings need an array \"branches\"");
  StarSettings s;
  std::size_t i = 0;
  for (const auto& b : j["branches"]) {
    const std::string where = "branches[" + std::to_string(i++) + "]";
    if (!b.is_object()) fail(where + " must be an object");
    reject_unknown(b, {"a0", "a1", "b0", "b1"}, where);
    for (const char* key : {"a0", "a1", "b0", "b1"})
      if (!b.contains(key)) fail(where + " needs field \"" + key + "\"");
    s.branches.push_back({vector_field(b["a0"], where + ".a0", warnings), vector_field(b["a1"], where + ".a1", warnings),
                          vector_field(b["b0"], where + ".b0", warnings), vector_field(b["b1"], where + ".b1", warnings)});
  }
  return s;
}

double round_significant(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

json to_json(const Vector3& v) {
  return json::array({round_significant(v(0)), round_significant(v(1)), round_significant(v(2))});
}

json to_json(const BilocalSettings& s) {
  return {{"a0", to_json(s.a0.vec())},   {"a1", to_json(s.a1.vec())},   {"bA0", to_json(s.bA0.vec())},
          {"bA1", to_json(s.bA1.vec())}, {"bC0", to_json(s.bC0.vec())}, {"bC1", to_json(s.bC1.vec())},
          {"c0", to_json(s.c0.vec())},   {"c1", to_json(s.c1.vec())}};
}

json to_json(const StarSettings& s) {
  json branches = json::array();
  for (const auto& b : s.branches)
    branches.push_back({{"a0", to_json(b.a0.vec())},
                        {"a1", to_json(b.a1.vec())},
                        {"b0", to_json(b.b0.vec())},
                        {"b1", to_json(b.b1.vec())}});
  return {{"branches", branches}};
}

}  // namespace qnetmax::io
