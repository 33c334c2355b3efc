#include "wvlab/phase_space.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>

#include "wvlab/spectral.hpp"

namespace wvlab {

double integrate(const PhaseField& f) {
  double s = 0.0;
  for (double v : f.values()) s += v;
  return s * f.grid().cell_volume();
}

double l2_norm(const PhaseField& f) {
  double s = 0.0;
  for (double v : f.values()) s += v * v;
  return std::sqrt(s * f.grid().cell_volume());
}

double l1_norm(const PhaseField& f) {
  double s = 0.0;
  for (double v : f.values()) s += std::abs(v);
  return s * f.grid().cell_volume();
}

double max_abs(const PhaseField& f) {
  double m = 0.0;
  for (double v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

double min_value(const PhaseField& f) {
  double m = std::numeric_limits<double>::infinity();
  for (double v : f.values()) m = std::min(m, v);
  return m;
}

double max_value(const PhaseField& f) {
  double m = -std::numeric_limits<double>::infinity();
  for (double v : f.values()) m = std::max(m, v);
  return m;
}

namespace {

// All multi-indices over `vars` variables with total order <= m.
void enumerate_orders(int vars, int m, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == vars) {
    out.push_back(cur);
    return;
  }
  int used = 0;
  for (int c : cur) used += c;
  for (int a = 0; a + used <= m; ++a) {
    cur.push_back(a);
    enumerate_orders(vars, m, cur, out);
    cur.pop_back();
  }
}

}  // namespace

double sobolev_norm(const PhaseField& f, int m) {
  if (m < 0 || m > 3) throw std::invalid_argument("sobolev_norm: order must be in 0..3");
  const PhaseGrid& g = f.grid();
  const int d = g.dim();
  PhaseTransform fft(g);
  std::copy(f.values().begin(), f.values().end(), fft.real().begin());
  fft.forward();

  const ModeTable xw = ModeTable::full(d, g.nx(), g.lx());
  const ModeTable kw(fft.k_modes(), g.lk());
  const std::size_t kh = fft.k_modes().half;
  const std::size_t last = g.nk() / 2 + 1;

  std::vector<std::vector<int>> orders;
  std::vector<int> cur;
  enumerate_orders(2 * d, m, cur, orders);
  std::vector<double> sums(orders.size(), 0.0);

  auto spec = fft.spectrum();
  for (std::size_t ix = 0; ix < g.x_points(); ++ix) {
    for (std::size_t ik = 0; ik < kh; ++ik) {
      const std::size_t jl = ik % last;
      // Half-spectrum modes other than 0 and n/2 on the last axis stand for a
      // conjugate pair.
      const double weight = (jl == 0 || 2 * jl == g.nk()) ? 1.0 : 2.0;
      const double p = weight * std::norm(spec[ix * kh + ik]);
      if (p == 0.0) continue;
      for (std::size_t o = 0; o < orders.size(); ++o) {
        double sym = 1.0;
        for (int a = 0; a < d; ++a) {
          const double wx = xw.odd_at(ix)[a];
          const double wk = kw.odd_at(ik)[a];
          for (int e = 0; e < orders[o][static_cast<std::size_t>(a)]; ++e) sym *= wx;
          for (int e = 0; e < orders[o][static_cast<std::size_t>(d + a)]; ++e) sym *= wk;
        }
        sums[o] += sym * sym * p;
      }
    }
  }
  const double norm = g.cell_volume() / static_cast<double>(g.size());
  double total = 0.0;
  for (double s : sums) total += std::sqrt(s * norm);
  return total;
}

double boundary_mass(const PhaseField& f, double shell) {
  const PhaseGrid& g = f.grid();
  const double xcut = (1.0 - shell) * g.lx();
  const double kcut = (1.0 - shell) * g.lk();
  std::vector<char> x_outer(g.x_points()), k_outer(g.k_points());
  for (std::size_t i = 0; i < g.x_points(); ++i) {
    bool out = false;
    for (int a = 0; a < g.dim(); ++a) out = out || std::abs(g.x_coord(i, a)) > xcut;
    x_outer[i] = out;
  }
  for (std::size_t j = 0; j < g.k_points(); ++j) {
    bool out = false;
    for (int a = 0; a < g.dim(); ++a) out = out || std::abs(g.k_coord(j, a)) > kcut;
    k_outer[j] = out;
  }
  double s = 0.0;
  for (std::size_t i = 0; i < g.x_points(); ++i)
    for (std::size_t j = 0; j < g.k_points(); ++j)
      if (x_outer[i] || k_outer[j]) s += std::abs(f.at(i, j));
  return s * g.cell_volume();
}

double k_second_moment(const PhaseField& f) {
  const PhaseGrid& g = f.grid();
  std::vector<double> k2(g.k_points());
  for (std::size_t j = 0; j < g.k_points(); ++j) k2[j] = g.k_norm2(j);
  double s = 0.0;
  for (std::size_t i = 0; i < g.x_points(); ++i)
    for (std::size_t j = 0; j < g.k_points(); ++j) s += k2[j] * f.at(i, j);
  return s * g.cell_volume();
}

// ---------------------------------------------------------------------------
// Binary I/O

namespace {

constexpr std::size_t kHeaderBytes = 4 + 4 + 4 + 8 + 8 + 4 * 8;

template <typename T>
void put_le(std::vector<unsigned char>& out, T value) {
  static_assert(sizeof(T) == 4 || sizeof(T) == 8);
  using U = std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint64_t>;
  U bits;
  std::memcpy(&bits, &value, sizeof(T));
  for (std::size_t b = 0; b < sizeof(T); ++b) out.push_back(static_cast<unsigned char>(bits >> (8 * b)));
}

template <typename T>
T get_le(const unsigned char* p) {
  using U = std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint64_t>;
  U bits = 0;
  for (std::size_t b = 0; b < sizeof(T); ++b) bits |= static_cast<U>(p[b]) << (8 * b);
  T value;
  std::memcpy(&value, &bits, sizeof(T));
  return value;
}

}  // namespace

void dump(const PhaseField& f, const std::filesystem::path& path) {
  const PhaseGrid& g = f.grid();
  std::vector<unsigned char> buf;
  buf.reserve(kHeaderBytes + 8 * f.size());
  buf.insert(buf.end(), std::begin(kFieldMagic), std::end(kFieldMagic));
  put_le<std::uint32_t>(buf, kFieldVersion);
  put_le<std::uint32_t>(buf, static_cast<std::uint32_t>(g.dim()));
  put_le<std::uint64_t>(buf, g.nx());
  put_le<std::uint64_t>(buf, g.nk());
  put_le<double>(buf, g.lx());
  put_le<double>(buf, g.lk());
  put_le<double>(buf, f.epsilon());
  put_le<double>(buf, f.time());
  for (double v : f.values()) put_le<double>(buf, v);

  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("dump: cannot open " + path.string());
  os.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!os) throw std::runtime_error("dump: write failed for " + path.string());
}

PhaseField load(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("load: cannot open " + path.string());
  std::vector<unsigned char> buf((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());

  if (buf.size() < kHeaderBytes) throw FormatError("load: truncated header in " + path.string());
  if (std::memcmp(buf.data(), kFieldMagic, 4) != 0) throw FormatError("load: bad magic in " + path.string());
  const unsigned char* p = buf.data() + 4;
  const auto version = get_le<std::uint32_t>(p);
  if (version != kFieldVersion) throw FormatError("load: unknown version " + std::to_string(version));
  const auto d = get_le<std::uint32_t>(p + 4);
  const auto nx = get_le<std::uint64_t>(p + 8);
  const auto nk = get_le<std::uint64_t>(p + 16);
  const auto lx = get_le<double>(p + 24);
  const auto lk = get_le<double>(p + 32);
  const auto eps = get_le<double>(p + 40);
  const auto time = get_le<double>(p + 48);

  PhaseGrid grid;
  try {
    grid = make_grid(static_cast<int>(d), nx, nk, lx, lk);
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("load: invalid header: ") + e.what());
  }
  const std::size_t expected = 8 * grid.size();
  const std::size_t payload = buf.size() - kHeaderBytes;
  if (payload != expected)
    throw FormatError("load: payload length " + std::to_string(payload) + " bytes, header implies " +
                      std::to_string(expected));

  std::vector<double> values(grid.size());
  const unsigned char* q = buf.data() + kHeaderBytes;
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = get_le<double>(q + 8 * i);
  return PhaseField(grid, std::move(values), eps, time);
}

}  // namespace wvlab
