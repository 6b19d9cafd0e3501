#include "harmonium/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <tuple>

namespace harmonium::entropy {

double entropy_density_at(const observables::PairCorrelation& G, double r) {
  const double g = G(r);
  if (g == 0.0) return 0.0;
  return -g * G.log_value(r);
}

EntropyProfile entropy_density(const observables::PairCorrelation& G, const std::vector<double>& grid) {
  EntropyProfile p;
  p.grid = grid;
  p.values.reserve(grid.size());
  for (double r : grid) p.values.push_back(entropy_density_at(G, r));
  p.total = total_entropy(G.wavefunction());
  return p;
}

Surface entropy_surface(const observables::PairCorrelation& G, int points, double extent) {
  if (points < 2) throw std::invalid_argument("surface needs at least 2 points per axis");
  if (extent <= 0.0) extent = 5.0 / std::sqrt(G.wavefunction().branch().omega);
  Surface s;
  for (int i = 0; i < points; ++i) s.x.push_back(-extent + 2.0 * extent * i / (points - 1));
  s.y = s.x;
  s.values.reserve(s.x.size() * s.y.size());
  for (double x : s.x)
    for (double y : s.y) s.values.push_back(entropy_density_at(G, std::hypot(x, y)));
  return s;
}

double total_entropy(const hooke::RadialWavefunction& wf, const QuadratureOptions& opts) {
  const observables::PairCorrelation G(wf);
  auto f = [&](double r) {
    const double u = wf.u(r);
    if (u == 0.0) return 0.0;
    return -u * u * G.log_value(r);
  };
  std::vector<double> pieces{0.0};
  for (double x : wf.nodes()) pieces.push_back(x);
  pieces.push_back(wf.r_max());
  return integrate_pieces(f, pieces, opts).value;
}

std::vector<ScanRow> entropy_scan(int n, const std::vector<int>& m_values, const std::vector<double>& Z_values,
                                  const QuadratureOptions& opts) {
  std::vector<std::future<std::vector<ScanRow>>> jobs;
  for (int m : m_values) {
    for (double Z : Z_values) {
      jobs.push_back(std::async(std::launch::async, [=] {
        std::vector<ScanRow> rows;
        for (const auto& b : hooke::solve_frequencies(n, Rational(m), Z))
          rows.push_back({m, b.omega, Z, total_entropy(hooke::RadialWavefunction::build(b), opts)});
        return rows;
      }));
    }
  }
  std::vector<ScanRow> out;
  for (auto& j : jobs) {
    auto rows = j.get();
    out.insert(out.end(), rows.begin(), rows.end());
  }
  std::sort(out.begin(), out.end(), [](const ScanRow& a, const ScanRow& b) {
    return std::tie(a.omega, a.m, a.Z) < std::tie(b.omega, b.m, b.Z);
  });
  return out;
}

}  // namespace harmonium::entropy
