#include "hyproj/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hyproj {

namespace {

using nlohmann::json;

void only_keys(const json& j, std::initializer_list<std::string_view> allowed, std::string_view what) {
  if (!j.is_object()) throw ConfigError(std::string(what) + ": expected an object");
  const std::set<std::string_view> keys(allowed);
  for (const auto& [key, value] : j.items())
    if (!keys.contains(key)) throw ConfigError(std::string(what) + ": unknown key '" + key + "'");
}

template <typename T>
T get(const json& j, const char* key, std::string_view what) {
  if (!j.contains(key)) throw ConfigError(std::string(what) + ": missing key '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string(what) + ": key '" + key + "' has the wrong type");
  }
}

Complex complex_from(const json& j, std::string_view what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ConfigError(std::string(what) + ": expected a number or [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to(Complex z) { return json::array({z.real(), z.imag()}); }

PolicyKind policy_kind_from(const std::string& s) {
  if (s == "first") return PolicyKind::First;
  if (s == "last") return PolicyKind::Last;
  if (s == "all") return PolicyKind::All;
  if (s == "continuity") return PolicyKind::Continuity;
  if (s == "explicit") return PolicyKind::Explicit;
  throw ConfigError("policy: unknown kind '" + s + "'");
}

std::string policy_kind_name(PolicyKind k) {
  switch (k) {
    case PolicyKind::First: return "first";
    case PolicyKind::Last: return "last";
    case PolicyKind::All: return "all";
    case PolicyKind::Continuity: return "continuity";
    case PolicyKind::Explicit: return "explicit";
  }
  return "last";
}

MapSpec map_from(const json& j) {
  const auto type = get<std::string>(j, "type", "map");
  try {
    if (type == "affine") {
      only_keys(j, {"type", "a", "b"}, "map");
      return MapSpec::affine(get<double>(j, "a", "map"), j.contains("b") ? complex_from(j["b"], "map.b") : Complex{});
    }
    if (type == "compose") {
      only_keys(j, {"type", "maps"}, "map");
      const json& parts = j.at("maps");
      if (!parts.is_array()) throw ConfigError("map.maps: expected an array");
      std::vector<MapSpec> maps;
      for (const json& p : parts) maps.push_back(map_from(p));
      return MapSpec::composition(std::move(maps));
    }
    if (type == "scaling") {
      only_keys(j, {"type"}, "map");
      return MapSpec::scaling();
    }
  } catch (const DomainError& e) {
    throw ConfigError(std::string("map: ") + e.what());
  } catch (const json::exception& e) {
    throw ConfigError(std::string("map: ") + e.what());
  }
  throw ConfigError("map: unknown type '" + type + "'");
}

json map_to(const MapSpec& m) {
  switch (m.kind()) {
    case MapSpec::Kind::Scaling: return {{"type", "scaling"}};
    case MapSpec::Kind::Composition: {
      json parts = json::array();
      for (const MapSpec& p : m.parts()) parts.push_back(map_to(p));
      return {{"type", "compose"}, {"maps", parts}};
    }
    case MapSpec::Kind::Affine: break;
  }
  return {{"type", "affine"}, {"a", m.collapsed().a}, {"b", complex_to(m.collapsed().b)}};
}

CurveSpec curve_from(const json& j) {
  const auto type = get<std::string>(j, "type", "curve");
  if (type == "radial_ray") {
    only_keys(j, {"type", "theta", "r0"}, "curve");
    return RadialRaySpec{get<double>(j, "theta", "curve"), j.value("r0", 1.0)};
  }
  if (type == "ray") {
    only_keys(j, {"type", "origin", "theta"}, "curve");
    if (!j.contains("origin")) throw ConfigError("curve: missing key 'origin'");
    return RaySpec{complex_from(j["origin"], "curve.origin"), get<double>(j, "theta", "curve")};
  }
  if (type == "horizontal_ray") {
    only_keys(j, {"type", "w"}, "curve");
    if (!j.contains("w")) throw ConfigError("curve: missing key 'w'");
    return HorizontalRaySpec{complex_from(j["w"], "curve.w")};
  }
  if (type == "vertical_ray") {
    only_keys(j, {"type", "x0", "sign"}, "curve");
    return VerticalRaySpec{get<double>(j, "x0", "curve"), j.value("sign", 1)};
  }
  if (type == "example") {
    only_keys(j, {"type", "id", "n_max"}, "curve");
    return ExampleCurveSpec{parse_example_id(get<std::string>(j, "id", "curve")), j.value("n_max", 12)};
  }
  throw ConfigError("curve: unknown type '" + type + "'");
}

json curve_to(const CurveSpec& spec) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, RadialRaySpec>)
          return {{"type", "radial_ray"}, {"theta", s.theta}, {"r0", s.r0}};
        else if constexpr (std::is_same_v<T, RaySpec>)
          return {{"type", "ray"}, {"origin", complex_to(s.origin)}, {"theta", s.theta}};
        else if constexpr (std::is_same_v<T, HorizontalRaySpec>)
          return {{"type", "horizontal_ray"}, {"w", complex_to(s.w)}};
        else if constexpr (std::is_same_v<T, VerticalRaySpec>)
          return {{"type", "vertical_ray"}, {"x0", s.x0}, {"sign", s.sign}};
        else
          return {{"type", "example"}, {"id", std::string(to_string(s.id))}, {"n_max", s.n_max}};
      },
      spec);
}

void apply_tolerances(const json& j, Tolerances& t) {
  only_keys(j,
            {"flat_tolerance", "min_tail_increment", "min_tail_pairs", "limit", "gate", "coincide", "coarse_samples",
             "samples_per_piece", "t_tol", "d_cluster", "domain_margin"},
            "tolerances");
  const auto set = [&](const char* key, auto& field) {
    if (j.contains(key)) field = get<std::decay_t<decltype(field)>>(j, key, "tolerances");
  };
  set("flat_tolerance", t.flat_tolerance);
  set("min_tail_increment", t.min_tail_increment);
  set("min_tail_pairs", t.min_tail_pairs);
  set("limit", t.limit);
  set("gate", t.gate);
  set("coincide", t.coincide);
  set("coarse_samples", t.projection.coarse_samples);
  set("samples_per_piece", t.projection.samples_per_piece);
  set("t_tol", t.projection.t_tol);
  set("d_cluster", t.projection.d_cluster);
  set("domain_margin", t.projection.domain_margin);
  if (t.min_tail_pairs < 1 || !(t.min_tail_increment >= 0.0) || !(t.limit > 0.0) || !(t.coincide > 0.0))
    throw ConfigError("tolerances: thresholds must be positive");
  t.projection.validate();
}

void apply_policy(const json& j, PolicyConfig& p) {
  only_keys(j, {"kind", "point", "indices", "otherwise"}, "policy");
  p = PolicyConfig{};
  p.kind = policy_kind_from(get<std::string>(j, "kind", "policy"));
  if (j.contains("point")) p.point = complex_from(j["point"], "policy.point");
  if (j.contains("indices")) p.indices = get<std::vector<int>>(j, "indices", "policy");
  if (j.contains("otherwise")) p.otherwise = policy_kind_from(get<std::string>(j, "otherwise", "policy"));
  if (p.kind == PolicyKind::Explicit && !p.point) throw ConfigError("policy: explicit kind needs a point");
  if (p.otherwise == PolicyKind::Explicit) throw ConfigError("policy: 'otherwise' cannot be explicit");
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
}

}  // namespace

ProjectionPolicy PolicyConfig::at(int n) const {
  const bool selected = indices.empty() || std::find(indices.begin(), indices.end(), n) != indices.end();
  const PolicyKind k = selected ? kind : otherwise;
  if (k == PolicyKind::Explicit) return ProjectionPolicy::explicit_point(HalfPlanePoint::from_complex(*point));
  return {k, {}};
}

bool PolicyConfig::needs_sequential() const {
  return kind == PolicyKind::Continuity || otherwise == PolicyKind::Continuity;
}

ScenarioConfig parse_config(std::string_view json_text, const ScenarioConfig& base) {
  const json doc = parse_document(json_text);
  only_keys(doc, {"map", "curve", "z", "w", "n_range", "policy", "tolerances"}, "config");
  ScenarioConfig cfg = base;
  if (doc.contains("map")) cfg.map = map_from(doc["map"]);
  if (doc.contains("curve")) {
    const json& c = doc["curve"];
    cfg.curves.clear();
    if (c.is_array())
      for (const json& item : c) cfg.curves.push_back(curve_from(item));
    else
      cfg.curves.push_back(curve_from(c));
    try {
      for (const CurveSpec& s : cfg.curves) make_curve(s);
    } catch (const DomainError& e) {
      throw ConfigError(std::string("curve: ") + e.what());
    } catch (const CurveError& e) {
      throw ConfigError(std::string("curve: ") + e.what());
    }
  }
  if (doc.contains("z")) cfg.z = complex_from(doc["z"], "z");
  if (doc.contains("w")) cfg.w = complex_from(doc["w"], "w");
  if (doc.contains("n_range")) {
    const json& r = doc["n_range"];
    if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer())
      throw ConfigError("n_range: expected [first, last]");
    cfg.n_range = {r[0].get<int>(), r[1].get<int>()};
  }
  if (doc.contains("policy")) apply_policy(doc["policy"], cfg.policy);
  if (doc.contains("tolerances")) apply_tolerances(doc["tolerances"], cfg.tolerances);
  if (cfg.n_range.first < 0 || cfg.n_range.last < cfg.n_range.first) throw ConfigError("n_range: empty or negative");
  if (!(cfg.z.real() > 0.0)) throw ConfigError("z: must lie in the right half-plane");
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path, const ScenarioConfig& base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_config(text.str(), base);
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::string dump_config(const ScenarioConfig& cfg) {
  json doc;
  if (cfg.map) doc["map"] = map_to(*cfg.map);
  if (cfg.curves.size() == 1) {
    doc["curve"] = curve_to(cfg.curves.front());
  } else if (!cfg.curves.empty()) {
    doc["curve"] = json::array();
    for (const CurveSpec& c : cfg.curves) doc["curve"].push_back(curve_to(c));
  }
  doc["z"] = complex_to(cfg.z);
  doc["w"] = complex_to(cfg.w);
  doc["n_range"] = json::array({cfg.n_range.first, cfg.n_range.last});
  json policy = {{"kind", policy_kind_name(cfg.policy.kind)}, {"otherwise", policy_kind_name(cfg.policy.otherwise)}};
  if (cfg.policy.point) policy["point"] = complex_to(*cfg.policy.point);
  if (!cfg.policy.indices.empty()) policy["indices"] = cfg.policy.indices;
  doc["policy"] = policy;
  const Tolerances& t = cfg.tolerances;
  doc["tolerances"] = {{"flat_tolerance", t.flat_tolerance},
                       {"min_tail_increment", t.min_tail_increment},
                       {"min_tail_pairs", t.min_tail_pairs},
                       {"limit", t.limit},
                       {"gate", t.gate},
                       {"coincide", t.coincide},
                       {"coarse_samples", t.projection.coarse_samples},
                       {"samples_per_piece", t.projection.samples_per_piece},
                       {"t_tol", t.projection.t_tol},
                       {"d_cluster", t.projection.d_cluster},
                       {"domain_margin", t.projection.domain_margin}};
  return doc.dump(2);
}

std::string map_to_json(const MapSpec& m) { return map_to(m).dump(); }
MapSpec map_from_json(std::string_view json_text) { return map_from(parse_document(json_text)); }
std::string curve_to_json(const CurveSpec& c) { return curve_to(c).dump(); }
CurveSpec curve_from_json(std::string_view json_text) { return curve_from(parse_document(json_text)); }

std::uint64_t seed_from_env() {
  const char* raw = std::getenv("HYPROJ_SEED");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0') throw ConfigError(std::string("HYPROJ_SEED is not an unsigned integer: ") + raw);
  return v;
}

}  // namespace hyproj
