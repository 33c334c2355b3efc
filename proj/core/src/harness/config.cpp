#include "wvlab/harness/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace wvlab::harness {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& v) {
  double out = 0.0;
  const auto* end = v.data() + v.size();
  auto [p, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || p != end) throw ConfigError("not a number: '" + v + "'");
  return out;
}

long to_long(const std::string& v) {
  long out = 0;
  const auto* end = v.data() + v.size();
  auto [p, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || p != end) throw ConfigError("not an integer: '" + v + "'");
  return out;
}

std::size_t to_size(const std::string& v) {
  const long n = to_long(v);
  if (n <= 0) throw ConfigError("expected a positive integer: '" + v + "'");
  return static_cast<std::size_t>(n);
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ConfigError("empty list item in '" + v + "'");
    out.push_back(item);
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

using Setter = std::function<void(RunConfig&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"d", [](RunConfig& c, const std::string& v) { c.d = static_cast<int>(to_long(v)); }},
      {"nx", [](RunConfig& c, const std::string& v) { c.nx = to_size(v); }},
      {"nk", [](RunConfig& c, const std::string& v) { c.nk = to_size(v); }},
      {"lx", [](RunConfig& c, const std::string& v) { c.lx = to_double(v); }},
      {"lk", [](RunConfig& c, const std::string& v) { c.lk = to_double(v); }},
      {"potential", [](RunConfig& c, const std::string& v) { c.potential = v; }},
      {"amplitude", [](RunConfig& c, const std::string& v) { c.amplitude = to_double(v); }},
      {"width", [](RunConfig& c, const std::string& v) { c.width = to_double(v); }},
      {"m0", [](RunConfig& c, const std::string& v) { c.m0 = to_double(v); }},
      {"sigma_x", [](RunConfig& c, const std::string& v) { c.sigma_x = to_double(v); }},
      {"eps",
       [](RunConfig& c, const std::string& v) {
         c.eps.clear();
         for (const auto& s : split_list(v)) c.eps.push_back(to_double(s));
       }},
      {"dt", [](RunConfig& c, const std::string& v) { c.dt = to_double(v); }},
      {"t_end", [](RunConfig& c, const std::string& v) { c.t_end = to_double(v); }},
      {"cadence", [](RunConfig& c, const std::string& v) { c.cadence = static_cast<int>(to_long(v)); }},
      {"e_time", [](RunConfig& c, const std::string& v) { c.e_time = to_double(v); }},
      {"datum", [](RunConfig& c, const std::string& v) { c.datum = v; }},
      {"threads", [](RunConfig& c, const std::string& v) { c.threads = static_cast<int>(to_long(v)); }},
      {"oracle_n", [](RunConfig& c, const std::string& v) { c.oracle_n = to_size(v); }},
      {"oracle_eps", [](RunConfig& c, const std::string& v) { c.oracle_eps = to_double(v); }},
      {"oracle_t", [](RunConfig& c, const std::string& v) { c.oracle_t = to_double(v); }},
      {"checks", [](RunConfig& c, const std::string& v) { c.checks = split_list(v); }},
      {"out", [](RunConfig& c, const std::string& v) { c.out = v; }},
  };
  return table;
}

}  // namespace

Potential RunConfig::phi() const {
  if (potential != "gaussian") throw ConfigError("unknown potential kind '" + potential + "'");
  return Potential::gaussian(amplitude, width, d);
}

long RunConfig::steps() const { return std::lround(t_end / dt); }

RunConfig parse_config(std::istream& in, const std::string& source) {
  RunConfig c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = source + ":" + std::to_string(lineno) + ": ";
    if (eq == std::string::npos) throw ConfigError(where + "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) throw ConfigError(where + "unknown key '" + key + "'");
    if (value.empty()) throw ConfigError(where + "missing value for '" + key + "'");
    try {
      it->second(c, value);
    } catch (const ConfigError& e) {
      throw ConfigError(where + key + ": " + e.what());
    }
  }
  validate(c);
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  return parse_config(in, path.string());
}

void validate(const RunConfig& c) {
  try {
    (void)c.grid();
    (void)c.phi();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (c.eps.empty()) throw ConfigError("eps list is empty");
  for (std::size_t i = 0; i < c.eps.size(); ++i) {
    if (!(c.eps[i] > 0.0)) throw ConfigError("eps values must be positive");
    if (i > 0 && !(c.eps[i] < c.eps[i - 1])) throw ConfigError("eps list must be strictly decreasing");
  }
  if (!(c.t_end > 0.0)) throw ConfigError("t_end must be positive");
  if (!(c.dt > 0.0)) throw ConfigError("dt must be positive");
  if (std::abs(static_cast<double>(c.steps()) * c.dt - c.t_end) > 1e-9 * c.t_end)
    throw ConfigError("dt must divide t_end");
  if (c.cadence < 1) throw ConfigError("cadence must be >= 1");
  if (!(c.e_time >= 0.0) || c.e_time > c.t_end) throw ConfigError("e_time must lie in [0, t_end]");
  if (!(c.m0 > 0.0) || !(c.sigma_x > 0.0)) throw ConfigError("m0 and sigma_x must be positive");
  if (c.datum != "profile" && c.datum != "seed") throw ConfigError("datum must be 'profile' or 'seed'");
  if (c.threads < 1) throw ConfigError("threads must be >= 1");
  if (!(c.oracle_eps > 0.0) || !(c.oracle_t > 0.0)) throw ConfigError("oracle_eps and oracle_t must be positive");
  try {
    (void)make_grid(c.d, c.oracle_n, c.oracle_n, c.lx, c.lk);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("oracle grid: ") + e.what());
  }
}

void check_resolution(const RunConfig& c) {
  const double hk = 2.0 * c.lk / static_cast<double>(c.nk);
  for (double e : c.eps) {
    if (hk > e * c.lk / 4.0)
      throw ConfigError("eps = " + fmt(e) + " is under-resolved: the momentum grid needs hk <= eps*lk/4 (hk = " +
                        fmt(hk) + ", limit " + fmt(e * c.lk / 4.0) + ")");
  }
}

std::string to_text(const RunConfig& c) {
  std::ostringstream o;
  auto join = [](const auto& v, auto f) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + f(v[i]);
    return s;
  };
  o << "d = " << c.d << "\n"
    << "nx = " << c.nx << "\n"
    << "nk = " << c.nk << "\n"
    << "lx = " << fmt(c.lx) << "\n"
    << "lk = " << fmt(c.lk) << "\n"
    << "potential = " << c.potential << "\n"
    << "amplitude = " << fmt(c.amplitude) << "\n"
    << "width = " << fmt(c.width) << "\n"
    << "m0 = " << fmt(c.m0) << "\n"
    << "sigma_x = " << fmt(c.sigma_x) << "\n"
    << "eps = " << join(c.eps, fmt) << "\n"
    << "dt = " << fmt(c.dt) << "\n"
    << "t_end = " << fmt(c.t_end) << "\n"
    << "cadence = " << c.cadence << "\n"
    << "e_time = " << fmt(c.e_time) << "\n"
    << "datum = " << c.datum << "\n"
    << "threads = " << c.threads << "\n"
    << "oracle_n = " << c.oracle_n << "\n"
    << "oracle_eps = " << fmt(c.oracle_eps) << "\n"
    << "oracle_t = " << fmt(c.oracle_t) << "\n"
    << "checks = " << join(c.checks, [](const std::string& s) { return s; }) << "\n"
    << "out = " << c.out << "\n";
  return o.str();
}

}  // namespace wvlab::harness
