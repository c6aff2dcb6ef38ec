// Copyright 2026 The optdyn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "optdyn/cli/config.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace optdyn::cli {
namespace {

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

double ParseDouble(const std::string& key, const std::string& v) {
  char* end = nullptr;
  const double out = std::strtod(v.c_str(), &end);
  if (v.empty() || end != v.c_str() + v.size()) {
    throw ConfigError("'" + key + "' expects a number, got '" + v + "'");
  }
  return out;
}

int64_t ParseInt(const std::string& key, const std::string& v) {
  // Accept scientific notation for horizons such as 1e6.
  const double d = ParseDouble(key, v);
  if (d != static_cast<double>(static_cast<int64_t>(d))) {
    throw ConfigError("'" + key + "' expects an integer, got '" + v + "'");
  }
  return static_cast<int64_t>(d);
}

bool ParseBool(const std::string& key, const std::string& v) {
  const std::string l = Lower(v);
  if (l == "true" || l == "1" || l == "yes") return true;
  if (l == "false" || l == "0" || l == "no") return false;
  throw ConfigError("'" + key + "' expects true or false, got '" + v + "'");
}

std::vector<double> ParseList(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(ParseDouble(key, Trim(item)));
  return out;
}

using Setter = std::function<void(ExperimentConfig&, const std::string&,
                                  const std::string&)>;

struct KeyInfo {
  Setter set;
  const char* help;
};

const std::map<std::string, KeyInfo>& Keys() {
  static const std::map<std::string, KeyInfo> keys = {
      {"game",
       {[](ExperimentConfig& c, const std::string& k, const std::string& v) {
          const std::string l = Lower(v);
          if (l == "a_delta") {
            c.game_kind = GameKind::kADelta;
          } else if (l == "a_dxdy") {
            c.game_kind = GameKind::kADxDy;
          } else if (l == "explicit") {
            c.game_kind = GameKind::kExplicit;
          } else {
            throw ConfigError("'" + k +
                              "' must be a_delta, a_dxdy or explicit");
          }
        },
        "a_delta | a_dxdy | explicit (default a_delta)"}},
      {"delta",
       {[](ExperimentConfig& c, const std::string& k, const std::string& v) {
          c.delta = ParseDouble(k, v);
        },
        "delta of A_delta, in (0, 1/2) (default 0.01)"}},
      {"delta_x",
       {[](ExperimentConfig& c, const std::string& k, const std::string& v) {
          c.delta_x = ParseDouble(k, v);
        },
        "delta_x of A_{dx,dy} (default 0.01)"}},
      {"delta_y",
       {[](ExperimentConfig& c, const std::string& k, const std::string& v) {
          c.delta_y = ParseDouble(k, v);
        },
        "delta_y of A_{dx,dy} (default 0.3)"}},
      {"rows",
       {[](ExperimentConfig& c, const std::string& k, const std::string& v) {
          c.rows = static_cast<int>(ParseInt(k, v));
        },
        "explicit game: number of rows"}},
      {"cols",
       {[](ExperimentConfig& c, const std::string& k, const std::string& v) {
          c.cols = static_cast<int>(ParseInt(k, v));
        },
        "explicit game: number of columns"}},
      {"entries",
       {[](ExperimentConfig& c, const std::string& k, const std::string& v) {
          c.entries = ParseList(k, v);
        },
        "explicit game: comma-separated entries, row-major"}},
      {"range_lo",
       {[](ExperimentConfig& c, const std::string& k, const std::string& v) {
          c.range.lo = ParseDouble(k, v);
        },
        "explicit game: lower end of the entry range (default 0)"}},
      {"range_hi",
       {[](ExperimentConfig& c, const std::string& k, const std::string& v) {
          c.range.hi = ParseDouble(k, v);
        },
        "explicit game: upper end of the entry range (default 1)"}},
      {"algorithm",
       {[](ExperimentConfig& c, const std::string&, const std::string& v) {
          c.algorithm_name = Lower(v);
        },
        "omwu | oftrl | oomd | ogda (default omwu)"}},
      {"regularizer",
       {[](ExperimentConfig& c, const std::string&, const std::string& v) {
          c.regularizer_name = Lower(v);
        },
        "entropy | sqeuclid | logbarrier | tsallis"}},
      {"beta",
       {[](ExperimentConfig& c, const std::string& k, const std::string& v) {
          c.beta = ParseDouble(k, v);
        },
        "Tsallis parameter in (0, 1) (default 0.5)"}},
      {"eta",
       {[](ExperimentConfig& c, const std::string& k, const std::string& v) {
          c.dynamics.eta = ParseDouble(k, v);
        },
        "step size (default 0.1)"}},
      {"horizon",
       {[](ExperimentConfig& c, const std::string& k, const std::string& v) {
          c.dynamics.horizon = ParseInt(k, v);
        },
        "number of iterations T (default 1000)"}},
      {"record_stride",
       {[](ExperimentConfig& c, const std::string& k, const std::string& v) {
          c.dynamics.record_stride = ParseInt(k, v);
          if (c.dynamics.record_stride < 1) {
            throw ConfigError("'" + k + "' must be at least 1");
          }
        },
        "keep every n-th iterate in the CSV (default: 1 below 1e5 steps)"}},
      {"scalar_2x2",
       {[](ExperimentConfig& c, const std::string& k, const std::string& v) {
          c.dynamics.use_scalar_2x2 = ParseBool(k, v);
        },
        "OFTRL on 2x2 games via the scalar map (default false)"}},
      {"csv",
       {[](ExperimentConfig& c, const std::string&, const std::string& v) {
          c.csv = v;
        },
        "trajectory CSV file name (default trajectory.csv)"}},
      {"report_csv",
       {[](ExperimentConfig& c, const std::string&, const std::string& v) {
          c.report_csv = v;
        },
        "convergence-series CSV file name (default convergence.csv)"}},
      {"json",
       {[](ExperimentConfig& c, const std::string&, const std::string& v) {
          c.json = v;
        },
        "summary JSON file name (default summary.json)"}},
      {"svg",
       {[](ExperimentConfig& c, const std::string&, const std::string& v) {
          c.svg = v;
        },
        "SVG plot file name (default: none)"}},
      {"gap_threshold",
       {[](ExperimentConfig& c, const std::string& k, const std::string& v) {
          c.gap_threshold = ParseDouble(k, v);
        },
        "gap marking the red region and bad runs (default 0.1)"}},
      {"c3",
       {[](ExperimentConfig& c, const std::string& k, const std::string& v) {
          c.c3 = ParseDouble(k, v);
        },
        "constant in (0, 1/2] for the bad-block prediction (default 0.5)"}},
  };
  return keys;
}

// Resolves names into the dynamics config and checks cross-field rules.
void Finalize(ExperimentConfig& c) {
  try {
    const Algorithm algorithm = ParseAlgorithm(c.algorithm_name);
    std::string reg = c.regularizer_name;
    if (c.algorithm_name == "omwu") {
      if (!reg.empty() && reg != "entropy") {
        throw ConfigError("algorithm omwu uses the entropy regularizer, got '" +
                          reg + "'");
      }
      reg = "entropy";
    }
    if (algorithm == Algorithm::kOgda) {
      if (!reg.empty() && reg != "sqeuclid") {
        throw ConfigError("algorithm ogda uses the sqeuclid regularizer, got '" +
                          reg + "'");
      }
      reg = "sqeuclid";
    }
    if (reg.empty()) reg = "entropy";
    c.dynamics.algorithm = algorithm;
    c.dynamics.regularizer = Regularizer::Parse(reg, c.beta);
    c.dynamics.Validate();
    const MatrixGame game = c.BuildGame();
    if (c.dynamics.use_scalar_2x2 && !game.IsTwoByTwo()) {
      throw ConfigError("scalar_2x2 requires a 2x2 game");
    }
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (!(c.gap_threshold > 0.0)) throw ConfigError("gap_threshold must be > 0");
  if (!(c.c3 > 0.0 && c.c3 <= 0.5)) throw ConfigError("c3 must lie in (0, 1/2]");
}

}  // namespace

std::string GameKindName(GameKind kind) {
  switch (kind) {
    case GameKind::kADelta:
      return "a_delta";
    case GameKind::kADxDy:
      return "a_dxdy";
    case GameKind::kExplicit:
      return "explicit";
  }
  return "unknown";
}

MatrixGame ExperimentConfig::BuildGame() const {
  switch (game_kind) {
    case GameKind::kADelta:
      return MakeADelta(delta);
    case GameKind::kADxDy:
      return MakeADxDy(delta_x, delta_y);
    case GameKind::kExplicit:
      return MatrixGame(rows, cols, entries, range);
  }
  throw DomainError("unknown game kind");
}

ExperimentConfig ParseConfig(const std::string& text) {
  ExperimentConfig c;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string body = Trim(raw.substr(0, raw.find('#')));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line) +
                            ": expected 'key = value'",
                        line);
    }
    const std::string key = Lower(Trim(body.substr(0, eq)));
    const std::string value = Trim(body.substr(eq + 1));
    const auto it = Keys().find(key);
    if (it == Keys().end()) {
      throw ConfigError(
          "line " + std::to_string(line) + ": unknown key '" + key + "'", line);
    }
    if (!seen.insert(key).second) {
      throw ConfigError(
          "line " + std::to_string(line) + ": duplicate key '" + key + "'",
          line);
    }
    try {
      it->second.set(c, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line) + ": " + e.what(), line);
    }
  }
  Finalize(c);
  return c;
}

ExperimentConfig LoadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return ParseConfig(ss.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what(), e.line());
  }
}

void SetConfigValue(ExperimentConfig& config, const std::string& key,
                    const std::string& value) {
  const auto it = Keys().find(Lower(key));
  if (it == Keys().end()) throw ConfigError("unknown key '" + key + "'");
  it->second.set(config, Lower(key), value);
  Finalize(config);
}

nlohmann::json ConfigToJson(const ExperimentConfig& c) {
  nlohmann::json j;
  j["game"] = GameKindName(c.game_kind);
  switch (c.game_kind) {
    case GameKind::kADelta:
      j["delta"] = c.delta;
      break;
    case GameKind::kADxDy:
      j["delta_x"] = c.delta_x;
      j["delta_y"] = c.delta_y;
      break;
    case GameKind::kExplicit:
      j["rows"] = c.rows;
      j["cols"] = c.cols;
      j["entries"] = c.entries;
      j["range"] = {c.range.lo, c.range.hi};
      break;
  }
  j["algorithm"] = c.algorithm_name;
  j["regularizer"] = c.dynamics.regularizer.Name();
  if (c.dynamics.regularizer.kind() == RegKind::kTsallis) {
    j["beta"] = c.dynamics.regularizer.beta();
  }
  j["eta"] = c.dynamics.eta;
  j["horizon"] = c.dynamics.horizon;
  j["record_stride"] = c.dynamics.EffectiveStride();
  j["scalar_2x2"] = c.dynamics.use_scalar_2x2;
  j["gap_threshold"] = c.gap_threshold;
  j["c3"] = c.c3;
  return j;
}

std::string ConfigKeysHelp() {
  std::string out = "Config file keys (key = value, '#' comments):\n";
  for (const auto& [key, info] : Keys()) {
    out += "  " + key + std::string(key.size() < 14 ? 14 - key.size() : 1, ' ') +
           info.help + "\n";
  }
  return out;
}

}  // namespace optdyn::cli
