#include "wvlab/harness/record.hpp"

#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace wvlab::harness {

std::array<double, kRowColumns.size()> to_array(const DiagnosticRow& r) {
  return {r.eps,        r.t,          r.mass_f,     r.l2_f,   r.energy_f, r.mass_g,  r.l2_g,
          r.energy_g,   r.husimi_min, r.husimi_max, r.error,  r.husimi_gap, r.e_norm, r.r1,
          r.support,    r.support_bound, r.h3_g};
}

DiagnosticRow row_from_array(const std::array<double, kRowColumns.size()>& a) {
  DiagnosticRow r;
  r.eps = a[0];
  r.t = a[1];
  r.mass_f = a[2];
  r.l2_f = a[3];
  r.energy_f = a[4];
  r.mass_g = a[5];
  r.l2_g = a[6];
  r.energy_g = a[7];
  r.husimi_min = a[8];
  r.husimi_max = a[9];
  r.error = a[10];
  r.husimi_gap = a[11];
  r.e_norm = a[12];
  r.r1 = a[13];
  r.support = a[14];
  r.support_bound = a[15];
  r.h3_g = a[16];
  return r;
}

std::array<double, kSummaryColumns.size()> to_array(const EpsSummary& s) {
  return {s.eps,       s.final_error, s.seed_gap,    s.seed_tail,       s.seed_l2,     s.seed_min_rel,
          s.seed_support, s.seed_h3,  s.f0_l1,       s.f0_h3,           s.f0_boundary_mass, s.step_mass_f,
          s.step_l2_f, s.energy_drift_f, s.step_mass_g, s.step_l2_g,    s.energy_drift_g};
}

namespace {

template <std::size_t N>
void write_table(const std::filesystem::path& path, const std::array<std::string_view, N>& header,
                 const std::vector<std::array<double, N>>& lines) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  for (std::size_t i = 0; i < N; ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  char buf[32];
  for (const auto& line : lines) {
    for (std::size_t i = 0; i < N; ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", line[i]);
      out << (i ? "," : "") << buf;
    }
    out << '\n';
  }
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

void emit_csv(const RunRecord& record, const std::filesystem::path& path) {
  std::vector<std::array<double, kRowColumns.size()>> lines;
  for (const auto& r : record.rows) lines.push_back(to_array(r));
  write_table(path, kRowColumns, lines);
}

void emit_summary_csv(const RunRecord& record, const std::filesystem::path& path) {
  std::vector<std::array<double, kSummaryColumns.size()>> lines;
  for (const auto& s : record.summary) lines.push_back(to_array(s));
  write_table(path, kSummaryColumns, lines);
}

std::vector<DiagnosticRow> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path.string() + ": missing header");
  std::vector<DiagnosticRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::array<double, kRowColumns.size()> a{};
    std::stringstream ss(line);
    std::string cell;
    std::size_t i = 0;
    while (std::getline(ss, cell, ',')) {
      if (i >= a.size()) throw std::runtime_error(path.string() + ": too many columns");
      // strtod accepts the inf/nan spellings printf produces.
      char* end = nullptr;
      a[i++] = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str()) throw std::runtime_error(path.string() + ": bad number '" + cell + "'");
    }
    if (i != a.size()) throw std::runtime_error(path.string() + ": too few columns");
    rows.push_back(row_from_array(a));
  }
  return rows;
}

}  // namespace wvlab::harness
