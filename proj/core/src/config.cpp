// Copyright 2026 The leontief Authors
// SPDX-License-Identifier: Apache-2.0

#include "leontief/config.hpp"

#include <yaml-cpp/yaml.h>

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "leontief/error.hpp"

namespace leontief {

DynamicsConfig DynamicsConfig::defaults() {
  DynamicsConfig d;
  const Establishment est{14, 1.0 / 1.09562, 1.0 / 1.68849, 65.0, 100.0};
  d.initial = ExpectationState{est, 1.0 / 1.09649, est.b, 0, std::nullopt};
  d.prices = FactorPrices{1.2, 0.05};
  d.policy = AdjustmentPolicy{};
  d.max_periods = 50;
  return d;
}

std::vector<FactorPoint> CesConfig::grid() const {
  std::vector<FactorPoint> out;
  out.reserve(static_cast<std::size_t>(steps) * static_cast<std::size_t>(steps));
  auto at = [this](double lo, double hi, int i) {
    return steps == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (steps - 1);
  };
  for (int i = 0; i < steps; ++i) {
    for (int j = 0; j < steps; ++j) {
      out.push_back({at(capital_min, capital_max, i), at(labor_min, labor_max, j)});
    }
  }
  return out;
}

RunConfig RunConfig::defaults() {
  RunConfig c;
  for (auto kind : {ScenarioKind::I, ScenarioKind::II, ScenarioKind::III, ScenarioKind::IV}) {
    c.scenarios.push_back(ScenarioSpec::defaults(kind));
  }
  return c;
}

void override_seed(RunConfig& config, std::uint64_t seed) {
  config.seed = seed;
  for (auto& spec : config.scenarios) spec.seed = seed;
}

void validate(const RunConfig& config) {
  auto fail = [](const std::string& what) { throw ConfigError(what); };
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) fail("alpha must lie in (0, 1)");
  if (!(config.regime_tolerance >= 0.0)) fail("regime_tolerance must be >= 0");
  std::set<std::string> labels;
  for (std::size_t i = 0; i < config.scenarios.size(); ++i) {
    const auto& spec = config.scenarios[i];
    try {
      validate(spec);
    } catch (const Error& e) {
      fail("scenarios[" + std::to_string(i) + "]: " + e.what());
    }
    if (!labels.insert(spec.label).second) {
      fail("scenarios[" + std::to_string(i) + "]: duplicate label '" + spec.label + "'");
    }
  }
  try {
    validate(config.dynamics.initial);
    validate(config.dynamics.prices);
    validate(config.dynamics.policy);
  } catch (const Error& e) {
    fail(std::string("dynamics: ") + e.what());
  }
  if (config.dynamics.max_periods < 2) fail("dynamics.max_periods must be >= 2");
  try {
    validate(CESParams{config.ces.share, config.ces.rho, config.ces.Z});
  } catch (const Error& e) {
    fail(std::string("ces: ") + e.what());
  }
  const auto& g = config.ces;
  if (!(g.capital_min > 0.0 && g.labor_min > 0.0 && g.capital_min <= g.capital_max &&
        g.labor_min <= g.labor_max)) {
    fail("ces: grid ranges must be positive with min <= max");
  }
  if (g.steps < 1) fail("ces.steps must be >= 1");
}

namespace {

// ---------------------------------------------------------------------------
// Parsing

class Parser {
 public:
  explicit Parser(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const YAML::Node& node, const std::string& path,
                         const std::string& what) const {
    std::string where = source_;
    if (node.IsDefined() && node.Mark().line >= 0) {
      where += ":" + std::to_string(node.Mark().line + 1);
    }
    throw ConfigError(where + ": " + path + ": " + what);
  }

  void require_map(const YAML::Node& node, const std::string& path,
                   std::initializer_list<const char*> allowed) const {
    if (!node.IsMap()) fail(node, path, "expected a mapping");
    for (const auto& kv : node) {
      const auto key = kv.first.as<std::string>();
      bool known = false;
      for (const char* a : allowed) known = known || key == a;
      if (!known) fail(kv.first, path, "unknown key '" + key + "'");
    }
  }

  template <typename T>
  void read(const YAML::Node& parent, const char* key, const std::string& path, T& out,
            const char* expected) const {
    const YAML::Node node = parent[key];
    if (!node.IsDefined() || node.IsNull()) return;
    try {
      out = node.as<T>();
    } catch (const YAML::Exception&) {
      fail(node, join(path, key), std::string("expected ") + expected);
    }
  }

  void number(const YAML::Node& p, const char* key, const std::string& path, double& out) const {
    read(p, key, path, out, "a number");
  }
  void integer(const YAML::Node& p, const char* key, const std::string& path, int& out) const {
    read(p, key, path, out, "an integer");
  }
  void text(const YAML::Node& p, const char* key, const std::string& path,
            std::string& out) const {
    read(p, key, path, out, "a string");
  }

  static std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
  }

  // Reads `key` as a coefficient, or `inv_key` as its reciprocal.
  void coefficient(const YAML::Node& p, const char* key, const char* inv_key,
                   const std::string& path, double& out) const {
    const bool direct = p[key].IsDefined() && !p[key].IsNull();
    const bool inverse = p[inv_key].IsDefined() && !p[inv_key].IsNull();
    if (direct && inverse) {
      fail(p[key], join(path, key), std::string("give either ") + key + " or " + inv_key);
    }
    if (direct) number(p, key, path, out);
    if (inverse) {
      double inv = 0.0;
      number(p, inv_key, path, inv);
      if (!(inv > 0.0)) fail(p[inv_key], join(path, inv_key), "must be positive");
      out = 1.0 / inv;
    }
  }

  template <typename Fn>
  auto convert(const YAML::Node& node, const std::string& path, Fn fn) const {
    try {
      return fn();
    } catch (const Error& e) {
      fail(node, path, e.what());
    }
  }

  ScenarioSpec scenario(const YAML::Node& node, const std::string& path,
                        std::uint64_t default_seed) const {
    require_map(node, path,
                {"kind", "label", "n", "capital_target", "labor_target", "coefficients",
                 "intensity_growth", "capital_slack", "pivot", "break_index", "dispersion",
                 "distribution", "seed"});
    std::string kind_token;
    text(node, "kind", path, kind_token);
    if (kind_token.empty()) fail(node, path, "missing required key 'kind'");
    const ScenarioKind kind = convert(node["kind"], join(path, "kind"),
                                      [&] { return scenario_kind_from_string(kind_token); });
    ScenarioSpec spec = ScenarioSpec::defaults(kind);
    spec.seed = default_seed;
    text(node, "label", path, spec.label);
    integer(node, "n", path, spec.n);
    number(node, "capital_target", path, spec.capital_target);
    number(node, "labor_target", path, spec.labor_target);
    if (const auto c = node["coefficients"]; c.IsDefined()) {
      const auto cp = join(path, "coefficients");
      require_map(c, cp, {"a_anchor", "b_anchor", "anchor", "a_decay", "b_decay"});
      number(c, "a_anchor", cp, spec.coefficients.a_anchor);
      number(c, "b_anchor", cp, spec.coefficients.b_anchor);
      integer(c, "anchor", cp, spec.coefficients.anchor);
      number(c, "a_decay", cp, spec.coefficients.a_decay);
      number(c, "b_decay", cp, spec.coefficients.b_decay);
    }
    number(node, "intensity_growth", path, spec.intensity_growth);
    number(node, "capital_slack", path, spec.capital_slack);
    integer(node, "pivot", path, spec.pivot);
    if (const auto b = node["break_index"]; b.IsDefined()) {
      if (b.IsNull()) {
        spec.break_index.reset();
      } else {
        int value = 0;
        integer(node, "break_index", path, value);
        spec.break_index = value;
      }
    }
    number(node, "dispersion", path, spec.dispersion);
    if (const auto d = node["distribution"]; d.IsDefined()) {
      const auto dp = join(path, "distribution");
      require_map(d, dp, {"family", "shape", "scale"});
      DistributionParams params = spec.distribution.value_or(DistributionParams{});
      std::string family;
      text(d, "family", dp, family);
      if (!family.empty()) {
        params.family = convert(d["family"], join(dp, "family"),
                                [&] { return distribution_family_from_string(family); });
      }
      number(d, "shape", dp, params.shape);
      number(d, "scale", dp, params.scale);
      spec.distribution = params;
    }
    read(node, "seed", path, spec.seed, "a non-negative integer");
    return spec;
  }

  void dynamics(const YAML::Node& node, DynamicsConfig& out) const {
    const std::string path = "dynamics";
    require_map(node, path, {"state", "prices", "policy", "max_periods"});
    if (const auto s = node["state"]; s.IsDefined()) {
      const std::string sp = "dynamics.state";
      require_map(s, sp,
                  {"id", "a", "b", "k", "l", "inv_a", "inv_b", "expected_a", "expected_b",
                   "expected_inv_a", "expected_inv_b", "moment"});
      auto& st = out.initial;
      integer(s, "id", sp, st.current.id);
      coefficient(s, "a", "inv_a", sp, st.current.a);
      coefficient(s, "b", "inv_b", sp, st.current.b);
      number(s, "k", sp, st.current.k);
      number(s, "l", sp, st.current.l);
      coefficient(s, "expected_a", "expected_inv_a", sp, st.expected_a);
      coefficient(s, "expected_b", "expected_inv_b", sp, st.expected_b);
      integer(s, "moment", sp, st.moment);
    }
    if (const auto p = node["prices"]; p.IsDefined()) {
      const std::string pp = "dynamics.prices";
      require_map(p, pp, {"real_wage", "real_interest"});
      number(p, "real_wage", pp, out.prices.real_wage);
      number(p, "real_interest", pp, out.prices.real_interest);
    }
    if (const auto p = node["policy"]; p.IsDefined()) {
      const std::string pp = "dynamics.policy";
      require_map(p, pp,
                  {"capital_step", "labor_step", "tolerance", "realization", "script",
                   "script_origin"});
      number(p, "capital_step", pp, out.policy.capital_step);
      number(p, "labor_step", pp, out.policy.labor_step);
      number(p, "tolerance", pp, out.policy.tolerance);
      std::string rule;
      text(p, "realization", pp, rule);
      if (!rule.empty()) {
        out.policy.realization = convert(p["realization"], join(pp, "realization"),
                                         [&] { return realization_rule_from_string(rule); });
      }
      if (const auto script = p["script"]; script.IsDefined()) {
        if (!script.IsSequence()) fail(script, join(pp, "script"), "expected a sequence");
        out.policy.script.clear();
        for (std::size_t i = 0; i < script.size(); ++i) {
          const auto ep = join(pp, "script") + "[" + std::to_string(i) + "]";
          require_map(script[i], ep, {"a", "b", "inv_a", "inv_b"});
          RealizedCoefficients rc;
          coefficient(script[i], "a", "inv_a", ep, rc.a);
          coefficient(script[i], "b", "inv_b", ep, rc.b);
          out.policy.script.push_back(rc);
        }
      }
      integer(p, "script_origin", pp, out.policy.script_origin);
    }
    integer(node, "max_periods", path, out.max_periods);
  }

  void ces(const YAML::Node& node, CesConfig& out) const {
    const std::string path = "ces";
    require_map(node, path,
                {"share", "rho", "Z", "capital_min", "capital_max", "labor_min", "labor_max",
                 "steps"});
    number(node, "share", path, out.share);
    number(node, "rho", path, out.rho);
    number(node, "Z", path, out.Z);
    number(node, "capital_min", path, out.capital_min);
    number(node, "capital_max", path, out.capital_max);
    number(node, "labor_min", path, out.labor_min);
    number(node, "labor_max", path, out.labor_max);
    integer(node, "steps", path, out.steps);
  }

  RunConfig document(const YAML::Node& root) const {
    RunConfig config = RunConfig::defaults();
    if (root.IsNull() || !root.IsDefined()) {
      validate(config);
      return config;
    }
    require_map(root, "<root>",
                {"alpha", "seed", "regime_tolerance", "output", "scenarios", "dynamics", "ces"});
    number(root, "alpha", "", config.alpha);
    read(root, "seed", "", config.seed, "a non-negative integer");
    number(root, "regime_tolerance", "", config.regime_tolerance);
    if (const auto out = root["output"]; out.IsDefined()) {
      require_map(out, "output", {"dir", "format"});
      std::string dir;
      text(out, "dir", "output", dir);
      if (!dir.empty()) config.output_dir = dir;
      std::string format;
      text(out, "format", "output", format);
      if (!format.empty()) {
        config.format = convert(out["format"], "output.format",
                                [&] { return output_format_from_string(format); });
      }
    }
    if (const auto list = root["scenarios"]; list.IsDefined()) {
      if (!list.IsSequence()) fail(list, "scenarios", "expected a sequence");
      config.scenarios.clear();
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string path = "scenarios[" + std::to_string(i) + "]";
        ScenarioSpec spec = scenario(list[i], path, config.seed);
        try {
          validate(spec);
        } catch (const Error& e) {
          fail(list[i], path, e.what());
        }
        config.scenarios.push_back(std::move(spec));
      }
    } else {
      for (auto& spec : config.scenarios) spec.seed = config.seed;
    }
    if (const auto d = root["dynamics"]; d.IsDefined()) dynamics(d, config.dynamics);
    if (const auto c = root["ces"]; c.IsDefined()) ces(c, config.ces);
    try {
      validate(config);
    } catch (const ConfigError& e) {
      throw ConfigError(source_ + ": " + e.what());
    }
    return config;
  }

 private:
  std::string source_;
};

}  // namespace

RunConfig parse_config(std::string_view text, std::string_view source) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ConfigError(std::string(source) + ":" + std::to_string(e.mark.line + 1) + ":" +
                      std::to_string(e.mark.column + 1) + ": parse error: " + e.msg);
  }
  return Parser(std::string(source)).document(root);
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open config '" + path.string() + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return parse_config(buf.str(), path.string());
}

// ---------------------------------------------------------------------------
// Emission

namespace {

std::string exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit_number(YAML::Emitter& out, const char* key, double v) {
  out << YAML::Key << key << YAML::Value << exact(v);
}

}  // namespace

std::string dump_config(const RunConfig& config) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  emit_number(out, "alpha", config.alpha);
  out << YAML::Key << "seed" << YAML::Value << config.seed;
  emit_number(out, "regime_tolerance", config.regime_tolerance);
  out << YAML::Key << "output" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "dir" << YAML::Value << YAML::DoubleQuoted << config.output_dir.string();
  out << YAML::Key << "format" << YAML::Value << std::string(to_string(config.format));
  out << YAML::EndMap;

  out << YAML::Key << "scenarios" << YAML::Value << YAML::BeginSeq;
  for (const auto& s : config.scenarios) {
    out << YAML::BeginMap;
    out << YAML::Key << "kind" << YAML::Value << std::string(to_string(s.kind));
    out << YAML::Key << "label" << YAML::Value << YAML::DoubleQuoted << s.label;
    out << YAML::Key << "n" << YAML::Value << s.n;
    emit_number(out, "capital_target", s.capital_target);
    emit_number(out, "labor_target", s.labor_target);
    out << YAML::Key << "coefficients" << YAML::Value << YAML::BeginMap;
    emit_number(out, "a_anchor", s.coefficients.a_anchor);
    emit_number(out, "b_anchor", s.coefficients.b_anchor);
    out << YAML::Key << "anchor" << YAML::Value << s.coefficients.anchor;
    emit_number(out, "a_decay", s.coefficients.a_decay);
    emit_number(out, "b_decay", s.coefficients.b_decay);
    out << YAML::EndMap;
    emit_number(out, "intensity_growth", s.intensity_growth);
    emit_number(out, "capital_slack", s.capital_slack);
    out << YAML::Key << "pivot" << YAML::Value << s.pivot;
    out << YAML::Key << "break_index" << YAML::Value;
    if (s.break_index) {
      out << *s.break_index;
    } else {
      out << YAML::Null;
    }
    emit_number(out, "dispersion", s.dispersion);
    if (s.distribution) {
      out << YAML::Key << "distribution" << YAML::Value << YAML::BeginMap;
      out << YAML::Key << "family" << YAML::Value << std::string(to_string(s.distribution->family));
      emit_number(out, "shape", s.distribution->shape);
      emit_number(out, "scale", s.distribution->scale);
      out << YAML::EndMap;
    }
    out << YAML::Key << "seed" << YAML::Value << s.seed;
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;

  const auto& d = config.dynamics;
  out << YAML::Key << "dynamics" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "state" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "id" << YAML::Value << d.initial.current.id;
  emit_number(out, "a", d.initial.current.a);
  emit_number(out, "b", d.initial.current.b);
  emit_number(out, "k", d.initial.current.k);
  emit_number(out, "l", d.initial.current.l);
  emit_number(out, "expected_a", d.initial.expected_a);
  emit_number(out, "expected_b", d.initial.expected_b);
  out << YAML::Key << "moment" << YAML::Value << d.initial.moment;
  out << YAML::EndMap;
  out << YAML::Key << "prices" << YAML::Value << YAML::BeginMap;
  emit_number(out, "real_wage", d.prices.real_wage);
  emit_number(out, "real_interest", d.prices.real_interest);
  out << YAML::EndMap;
  out << YAML::Key << "policy" << YAML::Value << YAML::BeginMap;
  emit_number(out, "capital_step", d.policy.capital_step);
  emit_number(out, "labor_step", d.policy.labor_step);
  emit_number(out, "tolerance", d.policy.tolerance);
  out << YAML::Key << "realization" << YAML::Value << std::string(to_string(d.policy.realization));
  out << YAML::Key << "script" << YAML::Value << YAML::BeginSeq;
  for (const auto& r : d.policy.script) {
    out << YAML::Flow << YAML::BeginMap;
    emit_number(out, "a", r.a);
    emit_number(out, "b", r.b);
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::Key << "script_origin" << YAML::Value << d.policy.script_origin;
  out << YAML::EndMap;
  out << YAML::Key << "max_periods" << YAML::Value << d.max_periods;
  out << YAML::EndMap;

  const auto& c = config.ces;
  out << YAML::Key << "ces" << YAML::Value << YAML::BeginMap;
  emit_number(out, "share", c.share);
  emit_number(out, "rho", c.rho);
  emit_number(out, "Z", c.Z);
  emit_number(out, "capital_min", c.capital_min);
  emit_number(out, "capital_max", c.capital_max);
  emit_number(out, "labor_min", c.labor_min);
  emit_number(out, "labor_max", c.labor_max);
  out << YAML::Key << "steps" << YAML::Value << c.steps;
  out << YAML::EndMap;

  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

}  // namespace leontief
