#include "kickfreeze/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>

namespace kickfreeze {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::string& where,
                         std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) known = known || item.key() == key;
    if (!known) {
      throw ConfigError("unknown key '" + (where.empty() ? "" : where + ".") + item.key() + "'");
    }
  }
}

double get_number(const json& obj, const char* key, const std::string& field, double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(field + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(field + ": must be finite");
  return x;
}

long get_count(const json& v, const std::string& field, long lo, long hi) {
  if (!v.is_number_integer()) throw ConfigError(field + ": expected an integer");
  const auto x = v.get<long long>();
  if (x < lo || x > hi) {
    throw ConfigError(field + ": must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                      "]");
  }
  return static_cast<long>(x);
}

bool get_bool(const json& obj, const char* key, const std::string& field, bool fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_boolean()) throw ConfigError(field + ": expected true or false");
  return obj.at(key).get<bool>();
}

std::string get_string(const json& obj, const char* key, const std::string& field,
                       const std::string& fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_string()) throw ConfigError(field + ": expected a string");
  return obj.at(key).get<std::string>();
}

std::vector<double> get_times(const json& v, const std::string& field, double divisor) {
  if (!v.is_array()) throw ConfigError(field + ": expected an array of numbers");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number() || !std::isfinite(x.get<double>())) {
      throw ConfigError(field + ": expected finite numbers");
    }
    out.push_back(x.get<double>() / divisor);
  }
  return out;
}

}  // namespace

std::string to_string(Convention c) { return c == Convention::paper ? "paper" : "standard"; }
std::string to_string(Disposal d) { return d == Disposal::trace ? "trace" : "postselect"; }
std::string to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

Convention parse_convention(const std::string& s) {
  if (s == "paper") return Convention::paper;
  if (s == "standard") return Convention::standard;
  throw ConfigError("convention: expected \"paper\" or \"standard\", got \"" + s + "\"");
}

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw ConfigError("output.format: expected \"csv\" or \"json\", got \"" + s + "\"");
}

KickSchedule<double> ExperimentConfig::schedule() const {
  if (kick_times) return KickSchedule<double>(total_time, *kick_times);
  return uniform_schedule(total_time, n_kicks.value_or(0));
}

ExperimentConfig config_from_json(const json& j) {
  ExperimentConfig cfg;
  reject_unknown_keys(j, "",
                      {"initial_state", "g", "protocol", "convention", "oracle", "sampling",
                       "output"});

  if (j.contains("initial_state")) {
    const json& s = j.at("initial_state");
    reject_unknown_keys(s, "initial_state", {"theta0", "phi0"});
    cfg.theta0 = get_number(s, "theta0", "initial_state.theta0", cfg.theta0);
    cfg.phi0 = get_number(s, "phi0", "initial_state.phi0", cfg.phi0);
  }

  cfg.g = get_number(j, "g", "g", cfg.g);
  if (!(cfg.g > 0)) throw ConfigError("g: coupling must be > 0");
  cfg.total_time = std::numbers::pi / (2 * cfg.g);

  if (j.contains("protocol")) {
    const json& p = j.at("protocol");
    reject_unknown_keys(p, "protocol", {"total_time", "total_gt", "n_kicks", "kick_times", "kick_gt"});
    if (p.contains("total_time") && p.contains("total_gt")) {
      throw ConfigError("protocol: give total_time or total_gt, not both");
    }
    if (p.contains("total_time")) {
      cfg.total_time = get_number(p, "total_time", "protocol.total_time", 0);
    } else if (p.contains("total_gt")) {
      cfg.total_time = get_number(p, "total_gt", "protocol.total_gt", 0) / cfg.g;
    }
    if (!(cfg.total_time > 0)) throw ConfigError("protocol.total_time: must be > 0");

    const int given = int(p.contains("n_kicks")) + int(p.contains("kick_times")) +
                      int(p.contains("kick_gt"));
    if (given > 1) throw ConfigError("protocol: give only one of n_kicks, kick_times, kick_gt");
    if (p.contains("n_kicks")) {
      cfg.n_kicks = get_count(p.at("n_kicks"), "protocol.n_kicks", 0, 1'000'000);
    } else if (p.contains("kick_times")) {
      cfg.n_kicks.reset();
      cfg.kick_times = get_times(p.at("kick_times"), "protocol.kick_times", 1.0);
    } else if (p.contains("kick_gt")) {
      cfg.n_kicks.reset();
      cfg.kick_times = get_times(p.at("kick_gt"), "protocol.kick_gt", cfg.g);
    }
  }

  if (j.contains("convention")) {
    if (!j.at("convention").is_string()) throw ConfigError("convention: expected a string");
    cfg.convention = parse_convention(j.at("convention").get<std::string>());
  }

  if (j.contains("oracle")) {
    const json& o = j.at("oracle");
    reject_unknown_keys(o, "oracle", {"enabled", "gamma", "freeze_hopping", "disposal"});
    cfg.oracle_enabled = get_bool(o, "enabled", "oracle.enabled", cfg.oracle_enabled);
    cfg.gamma = get_number(o, "gamma", "oracle.gamma", cfg.gamma);
    if (!(cfg.gamma > 0)) throw ConfigError("oracle.gamma: must be > 0");
    cfg.freeze_hopping = get_bool(o, "freeze_hopping", "oracle.freeze_hopping", cfg.freeze_hopping);
    const std::string d = get_string(o, "disposal", "oracle.disposal", "trace");
    if (d == "trace") {
      cfg.disposal = Disposal::trace;
    } else if (d == "postselect") {
      cfg.disposal = Disposal::postselect;
    } else {
      throw ConfigError("oracle.disposal: expected \"trace\" or \"postselect\", got \"" + d + "\"");
    }
  }

  if (j.contains("sampling")) {
    const json& s = j.at("sampling");
    reject_unknown_keys(s, "sampling", {"points_per_segment"});
    if (s.contains("points_per_segment")) {
      cfg.points_per_segment = static_cast<std::size_t>(
          get_count(s.at("points_per_segment"), "sampling.points_per_segment", 1, 100'000));
    }
  }

  if (j.contains("output")) {
    const json& o = j.at("output");
    reject_unknown_keys(o, "output", {"path", "format"});
    cfg.output_path = get_string(o, "path", "output.path", cfg.output_path);
    cfg.output_format = parse_format(get_string(o, "format", "output.format", "csv"));
  }

  try {
    (void)cfg.schedule();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("protocol: ") + e.what());
  }
  return cfg;
}

ExperimentConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config syntax error: ") + e.what());
  }
  return config_from_json(j);
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

json config_to_json(const ExperimentConfig& cfg) {
  json protocol = {{"total_time", cfg.total_time}};
  if (cfg.kick_times) {
    protocol["kick_times"] = *cfg.kick_times;
  } else {
    protocol["n_kicks"] = cfg.n_kicks.value_or(0);
  }
  return {
      {"initial_state", {{"theta0", cfg.theta0}, {"phi0", cfg.phi0}}},
      {"g", cfg.g},
      {"protocol", protocol},
      {"convention", to_string(cfg.convention)},
      {"oracle",
       {{"enabled", cfg.oracle_enabled},
        {"gamma", cfg.gamma},
        {"freeze_hopping", cfg.freeze_hopping},
        {"disposal", to_string(cfg.disposal)}}},
      {"sampling", {{"points_per_segment", cfg.points_per_segment}}},
      {"output", {{"path", cfg.output_path}, {"format", to_string(cfg.output_format)}}},
  };
}

}  // namespace kickfreeze
