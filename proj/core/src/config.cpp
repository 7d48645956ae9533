#include "muskat/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace muskat {

namespace {

const std::set<std::string> kKnownKeys = {
    "n_points", "kappa", "epsilon", "t_final", "dt", "cfl", "output_cadence",
    "initial_profile", "initial_amplitude", "initial_mode", "initial_offset",
    "mollifier_width", "scheme", "dealias", "eps_list"};

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    return x;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: field '" + key + "': cannot parse number '" + v + "'");
  }
}

}  // namespace

ParsedConfig parse_config_text(const std::string& text) {
  ParsedConfig out;
  bool have_dt = false, have_cfl = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (!kKnownKeys.contains(key)) {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
    if (out.raw.contains(key)) {
      throw std::invalid_argument("config: duplicate key '" + key + "'");
    }
    out.raw[key] = val;

    SimConfig& c = out.sim;
    if (key == "n_points") {
      c.n_points = static_cast<std::size_t>(parse_double(key, val));
    } else if (key == "kappa") {
      c.kappa = parse_double(key, val);
    } else if (key == "epsilon") {
      c.epsilon = parse_double(key, val);
    } else if (key == "t_final") {
      c.t_final = parse_double(key, val);
    } else if (key == "dt") {
      c.dt_rule = {DtRule::Kind::kFixed, parse_double(key, val)};
      have_dt = true;
    } else if (key == "cfl") {
      c.dt_rule = {DtRule::Kind::kCfl, parse_double(key, val)};
      have_cfl = true;
    } else if (key == "output_cadence") {
      c.output_cadence = static_cast<std::size_t>(parse_double(key, val));
    } else if (key == "initial_profile") {
      using P = InitialData::Profile;
      if (val == "zero") c.initial.profile = P::kZero;
      else if (val == "constant") c.initial.profile = P::kConstant;
      else if (val == "cosine") c.initial.profile = P::kCosine;
      else if (val == "sine") c.initial.profile = P::kSine;
      else if (val == "kink") c.initial.profile = P::kKink;
      else throw std::invalid_argument("config: field 'initial_profile': unknown profile '" + val + "'");
    } else if (key == "initial_amplitude") {
      c.initial.amplitude = parse_double(key, val);
    } else if (key == "initial_mode") {
      c.initial.mode = static_cast<int>(parse_double(key, val));
    } else if (key == "initial_offset") {
      c.initial.offset = parse_double(key, val);
    } else if (key == "mollifier_width") {
      c.mollifier_width = (val == "auto") ? -1.0 : parse_double(key, val);
    } else if (key == "scheme") {
      if (val == "euler") c.scheme = TimeScheme::kEuler;
      else if (val == "two_stage") c.scheme = TimeScheme::kTwoStage;
      else throw std::invalid_argument("config: field 'scheme': expected euler|two_stage");
    } else if (key == "dealias") {
      if (val == "true") c.dealias = true;
      else if (val == "false") c.dealias = false;
      else throw std::invalid_argument("config: field 'dealias': expected true|false");
    } else if (key == "eps_list") {
      std::istringstream vs(val);
      std::string tok;
      while (std::getline(vs, tok, ',')) {
        out.eps_list.push_back(parse_double(key, trim(tok)));
      }
    }
  }
  if (have_dt && have_cfl) {
    throw std::invalid_argument("config: 'dt' and 'cfl' are mutually exclusive");
  }
  out.sim.validate();
  return out;
}

ParsedConfig parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

}  // namespace muskat
