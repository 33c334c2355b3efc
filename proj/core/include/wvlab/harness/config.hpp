#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "wvlab/grid.hpp"
#include "wvlab/potential.hpp"

namespace wvlab::harness {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every knob of a sweep. Defaults are the shipped desk-scale setup.
struct RunConfig {
  // grid
  int d = 1;
  std::size_t nx = 512, nk = 512;
  double lx = 8.0, lk = 8.0;
  // interaction
  std::string potential = "gaussian";
  double amplitude = 1.0, width = 1.0;
  // classical profile
  double m0 = 2.0, sigma_x = 2.0;
  // sweep
  std::vector<double> eps{0.2, 0.1, 0.05, 0.025};
  double dt = 1e-3;
  double t_end = 0.5;
  int cadence = 50;      // steps between diagnostic rows
  double e_time = 0.25;  // time at which E and r1 are read off
  std::string datum = "profile";  // matched classical datum: profile | seed
  int threads = 1;
  // cross-picture oracle
  std::size_t oracle_n = 256;
  double oracle_eps = 0.1;
  double oracle_t = 0.5;
  // selection and output
  std::vector<std::string> checks{"all"};
  std::string out = "out";

  PhaseGrid grid() const { return make_grid(d, nx, nk, lx, lk); }
  Potential phi() const;
  long steps() const;
};

/// `key = value` lines; `#` starts a comment; lists are comma separated.
/// Unknown keys and malformed values raise ConfigError naming the line.
RunConfig parse_config(std::istream& in, const std::string& source = "<config>");
RunConfig load_config(const std::filesystem::path& path);

/// Throws ConfigError on inconsistent values: eps not strictly decreasing or
/// not positive, T <= 0, dt not dividing T, cadence < 1, unknown datum.
void validate(const RunConfig& c);

/// Rejects an eps whose oscillation scale the momentum grid does not
/// resolve: requires hk <= eps * lk / 4.
void check_resolution(const RunConfig& c);

/// Canonical text form (parseable by parse_config).
std::string to_text(const RunConfig& c);

}  // namespace wvlab::harness
