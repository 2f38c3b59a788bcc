// Run configuration for the CLI: flat key = value files or a JSON object
// with the same keys. Parse errors carry the offending key so the driver can
// report it and exit with the usage code.
#pragma once

#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace cli {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct SweepRange {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  int count = 1;
};

struct RunConfig {
  // equation parameters (C and E optional: validated instead of derived)
  std::map<std::string, double> params;  // keys: a,b,c,d,r,A,B,D and maybe C,E
  // cubic-form inputs for the canonicalize command
  std::map<std::string, double> cubic;

  std::string branch = "top";  // top | bottom | both
  std::optional<double> lambda;
  int sign_mu = 1;
  int sign_nu = 1;
  int N = 10;
  int n_max = 15;
  double grid_lo = -1.0;  // negative = defaulted from margin
  double grid_hi = -1.0;
  int grid_count = 50;
  double margin = 1e-3;
  std::string out;            // empty = stdout
  std::string format = "csv"; // csv | json
  long seed = 0;
  std::map<std::string, double> tol;
  std::vector<SweepRange> ranges;

  double lo() const { return grid_lo >= 0.0 ? grid_lo : margin; }
  double hi() const { return grid_hi >= 0.0 ? grid_hi : 1.0 - margin; }

  double tolerance(const std::string& name, double fallback) const {
    auto it = tol.find(name);
    return it == tol.end() ? fallback : it->second;
  }

  bool has_params(const char* const* keys, int count) const {
    for (int i = 0; i < count; ++i) {
      if (!params.count(keys[i])) return false;
    }
    return true;
  }
};

inline const char* const kFreeParamKeys[8] = {"a", "b", "c", "d", "r", "A", "B", "D"};
inline const char* const kCubicKeys[12] = {"root1",    "root2",    "root3",    "pi0",
                                           "pi2_0",    "pi2_1",    "pi2_2",    "pihat2_0",
                                           "pihat2_1", "pihat2_2", "pi1_0",    "pi1_1"};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("invalid numeric value for key \"" + key + "\"");
  }
}

inline int parse_int(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("invalid integer value for key \"" + key + "\"");
  }
}

inline int parse_sign(const std::string& key, const std::string& value) {
  if (value == "+" || value == "+1" || value == "1") return 1;
  if (value == "-" || value == "-1") return -1;
  throw ConfigError("invalid sign for key \"" + key + "\" (expected + or -)");
}

inline SweepRange parse_range(const std::string& key, const std::string& value) {
  SweepRange r;
  r.name = key.substr(6);  // after "range_"
  const auto c1 = value.find(':');
  const auto c2 = value.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw ConfigError("invalid range for key \"" + key + "\" (expected lo:hi:count)");
  }
  r.lo = parse_double(key, trim(value.substr(0, c1)));
  r.hi = parse_double(key, trim(value.substr(c1 + 1, c2 - c1 - 1)));
  r.count = parse_int(key, trim(value.substr(c2 + 1)));
  if (r.count < 1) throw ConfigError("range count must be >= 1 for key \"" + key + "\"");
  return r;
}

inline bool is_cubic_key(const std::string& key) {
  for (const char* k : kCubicKeys) {
    if (key == k) return true;
  }
  return false;
}

inline void apply(RunConfig& cfg, const std::string& key, const std::string& value) {
  static const std::string param_keys = "a b c d r A B C D E";
  if (key.size() <= 1 && param_keys.find(key) != std::string::npos) {
    cfg.params[key] = parse_double(key, value);
  } else if (is_cubic_key(key)) {
    cfg.cubic[key] = parse_double(key, value);
  } else if (key == "branch") {
    if (value != "top" && value != "bottom" && value != "both") {
      throw ConfigError("invalid value for key \"branch\" (top|bottom|both)");
    }
    cfg.branch = value;
  } else if (key == "lambda") {
    cfg.lambda = parse_double(key, value);
  } else if (key == "root_sign_mu") {
    cfg.sign_mu = parse_sign(key, value);
  } else if (key == "root_sign_nu") {
    cfg.sign_nu = parse_sign(key, value);
  } else if (key == "N") {
    cfg.N = parse_int(key, value);
    if (cfg.N < 0) throw ConfigError("key \"N\" must be >= 0");
  } else if (key == "n_max") {
    cfg.n_max = parse_int(key, value);
    if (cfg.n_max < 0) throw ConfigError("key \"n_max\" must be >= 0");
  } else if (key == "grid_lo") {
    cfg.grid_lo = parse_double(key, value);
  } else if (key == "grid_hi") {
    cfg.grid_hi = parse_double(key, value);
  } else if (key == "grid_count") {
    cfg.grid_count = parse_int(key, value);
    if (cfg.grid_count < 2) throw ConfigError("key \"grid_count\" must be >= 2");
  } else if (key == "margin") {
    cfg.margin = parse_double(key, value);
    if (cfg.margin <= 0.0 || cfg.margin >= 0.5) {
      throw ConfigError("key \"margin\" must lie in (0, 0.5)");
    }
  } else if (key == "out") {
    cfg.out = value;
  } else if (key == "format") {
    if (value != "csv" && value != "json") {
      throw ConfigError("invalid value for key \"format\" (csv|json)");
    }
    cfg.format = value;
  } else if (key == "seed") {
    cfg.seed = parse_int(key, value);
  } else if (key.rfind("tol_", 0) == 0) {
    cfg.tol[key.substr(4)] = parse_double(key, value);
  } else if (key.rfind("range_", 0) == 0) {
    cfg.ranges.push_back(parse_range(key, value));
  } else {
    throw ConfigError("unknown key \"" + key + "\"");
  }
}

inline void parse_flat(RunConfig& cfg, std::istream& in) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + " is not of the form key = value");
    }
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("empty key on line " + std::to_string(lineno));
    }
    apply(cfg, key, value);
  }
}

inline void parse_json(RunConfig& cfg, std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("JSON parse failure: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("JSON config must be an object");
  for (const auto& [key, value] : j.items()) {
    std::string text;
    if (value.is_string()) {
      text = value.get<std::string>();
    } else if (value.is_number_integer()) {
      text = std::to_string(value.get<long long>());
    } else if (value.is_number()) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", value.get<double>());
      text = buf;
    } else {
      throw ConfigError("unsupported JSON value type for key \"" + key + "\"");
    }
    apply(cfg, key, text);
  }
}

}  // namespace detail

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file \"" + path + "\"");
  RunConfig cfg;
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
    detail::parse_json(cfg, in);
  } else {
    detail::parse_flat(cfg, in);
  }
  return cfg;
}

// 17 significant digits, scientific: doubles survive a round trip.
inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

}  // namespace cli
