#include "dit/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace dit::cli {

namespace {

using json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

double parse_number(std::string_view text, std::string_view* rest) {
  std::string_view s = trim(text);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || !std::isfinite(value)) {
    throw ConfigError("expected a number, got '" + std::string(trim(text)) + "'");
  }
  if (rest) {
    *rest = trim(std::string_view(ptr, static_cast<std::size_t>(s.data() + s.size() - ptr)));
  } else if (ptr != s.data() + s.size()) {
    throw ConfigError("trailing characters in '" + std::string(trim(text)) + "'");
  }
  return value;
}

std::size_t parse_count(std::string_view text) {
  const std::string_view s = trim(text);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError("expected a non-negative integer, got '" + std::string(s) + "'");
  }
  return value;
}

bool is_infinity(std::string_view text, double* value) {
  const std::string s = lower(trim(text));
  if (s == "inf" || s == "+inf" || s == "infinity" || s == "+infinity") {
    *value = std::numeric_limits<double>::infinity();
    return true;
  }
  if (s == "-inf" || s == "-infinity") {
    *value = -std::numeric_limits<double>::infinity();
    return true;
  }
  return false;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == sep) {
      parts.push_back(s.substr(start, k - start));
      start = k + 1;
    }
  }
  return parts;
}

json detuning_json(double d) {
  if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
  return d;
}

double detuning_from_json(const json& j) {
  if (j.is_string()) {
    double value = 0.0;
    if (is_infinity(j.get<std::string>(), &value)) return value;
    return parse_quantity(j.get<std::string>());
  }
  return j.get<double>();
}

}  // namespace

ConfigError::ConfigError(const std::string& what, std::size_t line)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

Command parse_command(std::string_view name) {
  const std::string n = lower(trim(name));
  if (n == "spectrum") return Command::Spectrum;
  if (n == "phase") return Command::Phase;
  if (n == "kerr") return Command::Kerr;
  if (n == "oracle-check") return Command::OracleCheck;
  if (n == "figures") return Command::Figures;
  throw ConfigError("unknown command '" + std::string(trim(name)) +
                    "' (expected spectrum, phase, kerr, oracle-check or figures)");
}

const char* to_string(Command command) {
  switch (command) {
    case Command::Spectrum: return "spectrum";
    case Command::Phase: return "phase";
    case Command::Kerr: return "kerr";
    case Command::OracleCheck: return "oracle-check";
    case Command::Figures: return "figures";
  }
  return "?";
}

double parse_quantity(std::string_view text) {
  std::string_view unit;
  const double value = parse_number(text, &unit);
  const std::string u = lower(unit);
  if (u.empty() || u == "thz" || u == "rad/ps") return value;
  if (u == "ghz") return value * 1e-3;
  if (u == "mhz") return value * 1e-6;
  throw ConfigError("unknown unit '" + std::string(unit) + "' (expected THz, GHz, MHz or rad/ps)");
}

GridSpec parse_grid(std::string_view text) {
  const auto parts = split(trim(text), ':');
  if (parts.size() != 3) throw ConfigError("grid must be MIN:MAX:N, got '" + std::string(text) + "'");
  return {parse_quantity(parts[0]), parse_quantity(parts[1]), parse_count(parts[2])};
}

StarkDrive parse_drive(std::string_view text) {
  const auto parts = split(trim(text), ':');
  double off = 0.0;
  if (parts.size() == 1 && is_infinity(parts[0], &off)) return StarkDrive::none();
  if (parts.size() != 2) {
    throw ConfigError("drive must be DELTA:NPHOTONS or DELTA:FLUX/ps, got '" + std::string(text) + "'");
  }
  double detuning = 0.0;
  if (!is_infinity(parts[0], &detuning)) detuning = parse_quantity(parts[0]);

  std::string_view amount = trim(parts[1]);
  const bool flux = amount.size() > 3 && lower(amount.substr(amount.size() - 3)) == "/ps";
  if (flux) amount.remove_suffix(3);
  const double value = parse_number(amount, nullptr);
  if (value < 0.0) throw ConfigError("drive photon number / flux must be non-negative");
  return flux ? StarkDrive::flux(detuning, value) : StarkDrive::photons(detuning, value);
}

Formats parse_formats(std::string_view text) {
  Formats f{false, false, false};
  const std::string all = lower(trim(text));
  if (all == "none" || all.empty()) return f;
  for (std::string_view part : split(all, ',')) {
    const std::string_view name = trim(part);
    if (name == "csv") {
      f.csv = true;
    } else if (name == "json") {
      f.json = true;
    } else if (name == "svg") {
      f.svg = true;
    } else {
      throw ConfigError("unknown format '" + std::string(name) + "' (expected csv, json, svg)");
    }
  }
  return f;
}

LossSign parse_loss_sign(std::string_view text) {
  const std::string s = lower(trim(text));
  if (s == "literal") return LossSign::Literal;
  if (s == "absorptive") return LossSign::Absorptive;
  throw ConfigError("loss sign must be 'literal' or 'absorptive'");
}

void apply_setting(RunConfig& c, std::string_view raw_key, std::string_view value) {
  std::string key = lower(trim(raw_key));
  std::replace(key.begin(), key.end(), '-', '_');
  SystemParams& p = c.params;

  if (key == "command") {
    c.command = parse_command(value);
  } else if (key == "gamma") {
    p.gamma = parse_quantity(value);
  } else if (key == "kappa") {
    p.kappa = parse_quantity(value);
  } else if (key == "g1") {
    p.g1 = parse_quantity(value);
  } else if (key == "g2") {
    p.g2 = parse_quantity(value);
  } else if (key == "tau2") {
    p.tau2 = parse_quantity(value);
  } else if (key == "tau3") {
    p.tau3 = parse_quantity(value);
  } else if (key == "delta") {
    p.delta = parse_quantity(value);
  } else if (key == "omega0") {
    p.omega0 = parse_quantity(value);
  } else if (key == "nu") {
    p.nu = parse_quantity(value);
  } else if (key == "grid") {
    c.grid = parse_grid(value);
    c.grid_set = true;
  } else if (key == "points") {
    c.points_override = parse_count(value);
  } else if (key == "drive") {
    c.drives.push_back(parse_drive(value));
  } else if (key == "tol") {
    c.tol = parse_number(value, nullptr);
  } else if (key == "out" || key == "output_dir") {
    c.output_dir = std::string(trim(value));
  } else if (key == "formats") {
    c.formats = parse_formats(value);
    c.formats_set = true;
  } else if (key == "loss_sign") {
    c.loss_sign = parse_loss_sign(value);
  } else {
    throw ConfigError("unknown key '" + std::string(trim(raw_key)) + "'");
  }
}

RunConfig parse_config_text(std::istream& in, RunConfig base) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'", number);
    try {
      apply_setting(base, view.substr(0, eq), view.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(e.what(), number);
    }
  }
  return base;
}

RunConfig parse_manifest(std::string_view text, RunConfig c) {
  try {
    const json doc = json::parse(text);
    c.command = parse_command(doc.at("command").get<std::string>());
    const json& p = doc.at("params");
    c.params.gamma = p.at("gamma").get<double>();
    c.params.kappa = p.at("kappa").get<double>();
    c.params.g1 = p.at("g1").get<double>();
    c.params.g2 = p.at("g2").get<double>();
    c.params.tau2 = p.at("tau2").get<double>();
    c.params.tau3 = p.at("tau3").get<double>();
    c.params.delta = p.at("delta").get<double>();
    c.params.omega0 = p.at("omega0").get<double>();
    c.params.nu = p.at("nu").get<double>();

    c.grid_set = doc.value("grid_explicit", false);
    if (c.grid_set) {
      const json& g = doc.contains("grid_requested") ? doc.at("grid_requested") : doc.at("grid");
      c.grid = {g.at("min").get<double>(), g.at("max").get<double>(), g.at("points").get<std::size_t>()};
    }
    c.points_override = doc.value("points_override", std::size_t{0});

    c.drives.clear();
    for (const json& d : doc.value("drives", json::array())) {
      const double detuning = detuning_from_json(d.at("Delta"));
      if (d.value("mode", std::string("photon-number")) == "input-flux") {
        c.drives.push_back(StarkDrive::flux(detuning, d.at("input_flux").get<double>()));
      } else {
        c.drives.push_back(StarkDrive::photons(detuning, d.at("n_photons").get<double>()));
      }
    }
    c.tol = doc.value("tol", c.tol);
    if (doc.contains("output_dir")) c.output_dir = doc.at("output_dir").get<std::string>();
    c.formats_set = doc.value("formats_explicit", false);
    if (c.formats_set) {
      c.formats = Formats{false, false, false};
      for (const json& f : doc.at("formats")) {
        const Formats one = parse_formats(f.get<std::string>());
        c.formats.csv |= one.csv;
        c.formats.json |= one.json;
        c.formats.svg |= one.svg;
      }
    }
    if (doc.contains("loss_sign")) c.loss_sign = parse_loss_sign(doc.at("loss_sign").get<std::string>());
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid manifest: ") + e.what());
  }
  return c;
}

RunConfig load_config_file(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') return parse_manifest(body, std::move(base));
  std::istringstream stream(text);
  return parse_config_text(stream, std::move(base));
}

GridSpec default_grid(Command command) {
  switch (command) {
    case Command::Kerr: return {-1.0, 1.0, 2001};
    case Command::OracleCheck: return {-1.0, 1.0, 41};
    default: return {-3.0, 3.0, 2001};
  }
}

GridSpec effective_grid(const RunConfig& c) {
  GridSpec g = c.grid_set ? c.grid : default_grid(c.command);
  if (c.points_override != 0) g.points = c.points_override;
  return g;
}

Formats effective_formats(const RunConfig& c) {
  if (c.formats_set) return c.formats;
  if (c.command == Command::Figures) return {true, true, true};
  return {true, true, false};
}

std::vector<StarkDrive> default_kerr_drives(const SystemParams& p) {
  return {StarkDrive::none(), StarkDrive::photons(-20.0 * p.g2, 1.0),
          StarkDrive::photons(-10.0 * p.g2, 1.0), StarkDrive::photons(-6.0 * p.g2, 1.0)};
}

std::string manifest_json(const RunConfig& c, const std::vector<std::string>& outputs) {
  const SystemParams& p = c.params;
  const GridSpec g = effective_grid(c);
  const Formats f = effective_formats(c);

  json drives = json::array();
  for (const StarkDrive& d : c.drives) {
    json item{{"Delta", detuning_json(d.detuning)}, {"mode", dit::to_string(d.mode)}};
    if (d.mode == DriveMode::PhotonNumber) {
      item["n_photons"] = d.n_photons;
    } else {
      item["input_flux"] = d.input_flux;
    }
    drives.push_back(std::move(item));
  }
  json formats = json::array();
  if (f.csv) formats.push_back("csv");
  if (f.json) formats.push_back("json");
  if (f.svg) formats.push_back("svg");

  json doc{
      {"command", to_string(c.command)},
      {"units", "rad/ps (THz)"},
      {"params",
       {{"gamma", p.gamma}, {"kappa", p.kappa}, {"g1", p.g1}, {"g2", p.g2}, {"tau2", p.tau2},
        {"tau3", p.tau3}, {"delta", p.delta}, {"omega0", p.omega0}, {"nu", p.nu}}},
      {"grid", {{"min", g.min}, {"max", g.max}, {"points", g.points}}},
      {"grid_explicit", c.grid_set},
      {"points_override", c.points_override},
      {"drives", std::move(drives)},
      {"tol", c.tol},
      {"output_dir", c.output_dir.generic_string()},
      {"formats", std::move(formats)},
      {"formats_explicit", c.formats_set},
      {"loss_sign", dit::to_string(c.loss_sign)},
      {"outputs", outputs},
  };
  if (c.grid_set && c.points_override != 0) {
    doc["grid_requested"] = {{"min", c.grid.min}, {"max", c.grid.max}, {"points", c.grid.points}};
  }
  return doc.dump(2) + "\n";
}

}  // namespace dit::cli
