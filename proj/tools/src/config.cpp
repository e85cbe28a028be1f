#include "fkfront_app/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string_view>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "fkfront/io.hpp"

namespace fkfront::app {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view text, const std::string& key) {
  text = trim(text);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty()) {
    throw ConfigError(key + ": expected a real number, got '" + std::string(text) + "'");
  }
  if (!std::isfinite(value)) throw ConfigError(key + ": value must be finite");
  return value;
}

std::size_t parse_count(std::string_view text, const std::string& key) {
  text = trim(text);
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty()) {
    throw ConfigError(key + ": expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> items;
  while (true) {
    const auto comma = text.find(',');
    items.push_back(trim(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return items;
}

std::vector<double> parse_real_list(std::string_view text, const std::string& key) {
  std::vector<double> out;
  for (auto item : split_list(text)) out.push_back(parse_real(item, key));
  return out;
}

Branch parse_branch(std::string_view text, const std::string& key) {
  if (text == "plus") return Branch::plus;
  if (text == "minus") return Branch::minus;
  throw ConfigError(key + ": expected 'plus' or 'minus', got '" + std::string(text) + "'");
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += io::format_real(values[i]);
  }
  return out;
}

const char* to_string(ProfileKind p) { return p == ProfileKind::quadratic ? "quadratic" : "constant"; }

using Setter = void (*)(ExperimentConfig&, std::string_view, const std::string&);

const std::map<std::string, std::map<std::string, Setter>>& schema() {
  static const std::map<std::string, std::map<std::string, Setter>> table{
      {"domain",
       {{"L", [](ExperimentConfig& c, std::string_view v, const std::string& k) { c.domain.L = parse_real(v, k); }},
        {"n", [](ExperimentConfig& c, std::string_view v, const std::string& k) { c.domain.n = parse_count(v, k); }}}},
      {"physics",
       {{"epsilon", [](ExperimentConfig& c, std::string_view v, const std::string& k) { c.physics.epsilon = parse_real(v, k); }},
        {"x_c0", [](ExperimentConfig& c, std::string_view v, const std::string& k) { c.physics.x_c0 = parse_real(v, k); }},
        {"profile",
         [](ExperimentConfig& c, std::string_view v, const std::string& k) {
           v = trim(v);
           if (v == "quadratic") c.physics.profile = ProfileKind::quadratic;
           else if (v == "constant") c.physics.profile = ProfileKind::constant;
           else throw ConfigError(k + ": expected 'quadratic' or 'constant', got '" + std::string(v) + "'");
         }},
        {"diffusion_constant",
         [](ExperimentConfig& c, std::string_view v, const std::string& k) { c.physics.diffusion_constant = parse_real(v, k); }},
        {"level", [](ExperimentConfig& c, std::string_view v, const std::string& k) { c.physics.level = parse_real(v, k); }}}},
      {"solver",
       {{"dt", [](ExperimentConfig& c, std::string_view v, const std::string& k) { c.solver.dt = parse_real(v, k); }},
        {"t_end", [](ExperimentConfig& c, std::string_view v, const std::string& k) { c.solver.t_end = parse_real(v, k); }},
        {"snapshot_stride",
         [](ExperimentConfig& c, std::string_view v, const std::string& k) { c.solver.snapshot_stride = parse_count(v, k); }}}},
      {"sweep",
       {{"epsilons", [](ExperimentConfig& c, std::string_view v, const std::string& k) { c.sweep.epsilons = parse_real_list(v, k); }},
        {"trap_radius", [](ExperimentConfig& c, std::string_view v, const std::string& k) { c.sweep.trap_radius = parse_real(v, k); }},
        {"workers", [](ExperimentConfig& c, std::string_view v, const std::string& k) { c.sweep.workers = parse_count(v, k); }}}},
      {"eigen",
       {{"modes", [](ExperimentConfig& c, std::string_view v, const std::string& k) { c.eigen.modes = parse_count(v, k); }},
        {"export_modes", [](ExperimentConfig& c, std::string_view v, const std::string& k) { c.eigen.export_modes = parse_count(v, k); }}}},
      {"wkb",
       {{"x0", [](ExperimentConfig& c, std::string_view v, const std::string& k) { c.wkb.x0 = parse_real_list(v, k); }},
        {"htilde", [](ExperimentConfig& c, std::string_view v, const std::string& k) { c.wkb.htilde = parse_real_list(v, k); }},
        {"branches",
         [](ExperimentConfig& c, std::string_view v, const std::string& k) {
           c.wkb.branches.clear();
           for (auto item : split_list(v)) c.wkb.branches.push_back(parse_branch(item, k));
         }},
        {"t_end", [](ExperimentConfig& c, std::string_view v, const std::string& k) { c.wkb.t_end = parse_real(v, k); }},
        {"dt", [](ExperimentConfig& c, std::string_view v, const std::string& k) { c.wkb.dt = parse_real(v, k); }},
        {"stride", [](ExperimentConfig& c, std::string_view v, const std::string& k) { c.wkb.stride = parse_count(v, k); }}}},
      {"sfa",
       {{"speed", [](ExperimentConfig& c, std::string_view v, const std::string& k) { c.sfa.speed = parse_real(v, k); }}}},
  };
  return table;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

}  // namespace

void ExperimentConfig::validate() const {
  require(domain.L > 0.0, "domain.L must be positive");
  require(domain.n >= 3, "domain.n must be at least 3");
  require(physics.epsilon > 0.0, "physics.epsilon must be positive");
  require(physics.diffusion_constant > 0.0, "physics.diffusion_constant must be positive");
  require(physics.x_c0 > -domain.L && physics.x_c0 < domain.L, "physics.x_c0 must lie inside (-L, L)");
  require(physics.level > 0.0 && physics.level < 1.0, "physics.level must lie in (0, 1)");
  try {
    solver.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("solver: ") + e.what());
  }
  require(!sweep.epsilons.empty(), "sweep.epsilons must not be empty");
  for (double e : sweep.epsilons) require(e > 0.0, "sweep.epsilons must be positive");
  require(sweep.trap_radius > 0.0, "sweep.trap_radius must be positive");
  require(sweep.workers >= 1, "sweep.workers must be at least 1");
  require(eigen.modes >= 1, "eigen.modes must be at least 1");
  require(eigen.export_modes <= eigen.modes, "eigen.export_modes must not exceed eigen.modes");
  require(!wkb.x0.empty(), "wkb.x0 must not be empty");
  require(!wkb.htilde.empty(), "wkb.htilde must not be empty");
  for (double h : wkb.htilde) require(h >= 0.0, "wkb.htilde must be non-negative");
  require(!wkb.branches.empty(), "wkb.branches must not be empty");
  require(wkb.t_end >= 0.0, "wkb.t_end must be non-negative");
  require(wkb.dt > 0.0, "wkb.dt must be positive");
  require(wkb.stride >= 1, "wkb.stride must be at least 1");
  require(sfa.speed > 0.0, "sfa.speed must be positive");
}

Grid ExperimentConfig::grid() const { return Grid(domain.L, domain.n); }

FrontSpec ExperimentConfig::front() const { return FrontSpec{physics.x_c0, physics.level}; }

DiffusionProfile ExperimentConfig::diffusion() const { return diffusion(physics.epsilon); }

DiffusionProfile ExperimentConfig::diffusion(double epsilon) const {
  if (physics.profile == ProfileKind::constant) {
    return make_constant_diffusion(physics.diffusion_constant);
  }
  return make_quadratic_diffusion(epsilon);
}

nlohmann::ordered_json ExperimentConfig::to_json() const {
  nlohmann::ordered_json j;
  j["domain"] = {{"L", domain.L}, {"n", domain.n}};
  j["physics"] = {{"epsilon", physics.epsilon},
                  {"x_c0", physics.x_c0},
                  {"profile", to_string(physics.profile)},
                  {"diffusion_constant", physics.diffusion_constant},
                  {"level", physics.level}};
  j["solver"] = {{"dt", solver.dt}, {"t_end", solver.t_end}, {"snapshot_stride", solver.snapshot_stride}};
  j["sweep"] = {{"epsilons", sweep.epsilons}, {"trap_radius", sweep.trap_radius}, {"workers", sweep.workers}};
  j["eigen"] = {{"modes", eigen.modes}, {"export_modes", eigen.export_modes}};
  std::vector<std::string> branches;
  for (Branch b : wkb.branches) branches.emplace_back(fkfront::to_string(b));
  j["wkb"] = {{"x0", wkb.x0}, {"htilde", wkb.htilde}, {"branches", branches},
              {"t_end", wkb.t_end}, {"dt", wkb.dt}, {"stride", wkb.stride}};
  j["sfa"] = {{"speed", sfa.speed}};
  return j;
}

std::string ExperimentConfig::canonical() const {
  std::ostringstream out;
  const auto line = [&](const char* key, const std::string& value) { out << key << " = " << value << '\n'; };
  const auto real = [](double v) { return io::format_real(v); };
  line("domain.L", real(domain.L));
  line("domain.n", std::to_string(domain.n));
  line("physics.epsilon", real(physics.epsilon));
  line("physics.x_c0", real(physics.x_c0));
  line("physics.profile", to_string(physics.profile));
  line("physics.diffusion_constant", real(physics.diffusion_constant));
  line("physics.level", real(physics.level));
  line("solver.dt", real(solver.dt));
  line("solver.t_end", real(solver.t_end));
  line("solver.snapshot_stride", std::to_string(solver.snapshot_stride));
  line("sweep.epsilons", join(sweep.epsilons));
  line("sweep.trap_radius", real(sweep.trap_radius));
  line("eigen.modes", std::to_string(eigen.modes));
  line("eigen.export_modes", std::to_string(eigen.export_modes));
  line("wkb.x0", join(wkb.x0));
  line("wkb.htilde", join(wkb.htilde));
  std::string branches;
  for (Branch b : wkb.branches) branches += std::string(branches.empty() ? "" : ",") + fkfront::to_string(b);
  line("wkb.branches", branches);
  line("wkb.t_end", real(wkb.t_end));
  line("wkb.dt", real(wkb.dt));
  line("wkb.stride", std::to_string(wkb.stride));
  line("sfa.speed", real(sfa.speed));
  return out.str();
}

std::uint64_t ExperimentConfig::hash() const {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : canonical()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string ExperimentConfig::hash_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
  return buf;
}

ExperimentConfig parse_config(std::istream& in) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  ExperimentConfig config;
  const auto& table = schema();
  for (const auto& [section, body] : tree) {
    const auto sec = table.find(section);
    if (sec == table.end()) {
      if (body.empty()) throw ConfigError("key outside any section: '" + section + "'");
      throw ConfigError("unknown section [" + section + "]");
    }
    for (const auto& [key, node] : body) {
      const std::string name = section + "." + key;
      const auto setter = sec->second.find(key);
      if (setter == sec->second.end()) throw ConfigError("unknown key " + name);
      setter->second(config, node.data(), name);
    }
  }
  config.validate();
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  return parse_config(in);
}

}  // namespace fkfront::app
