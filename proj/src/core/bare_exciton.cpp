#include "core/bare_exciton.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "core/constants.hpp"
#include "core/dense_eig.hpp"

namespace kinpol {

namespace {

bool is_half_integer(double mu) {
  const double twice = 2.0 * mu;
  return std::abs(twice - std::round(twice)) < 1e-9 && std::labs(std::lround(twice)) % 2 == 1;
}

}  // namespace

double bare_amplitude(int n, double mu, int n_sites) {
  if (n < -n_sites / 2 + 1 || n > n_sites / 2) throw std::out_of_range("n outside (-N/2, N/2]");
  if (!is_half_integer(mu)) throw std::invalid_argument("mu must be half-integer");
  if (n == 0) return 0.0;
  const double arg = constants::two_pi * mu * std::abs(n) / n_sites;  // |n| a kappa_mu
  return std::sqrt(2.0 / n_sites) * std::sin(arg);
}

double bare_energy_offset(double mu, const ModelParams& p) {
  if (!is_half_integer(mu)) throw std::invalid_argument("mu must be half-integer");
  return 4.0 * p.t * std::cos(constants::two_pi * mu / p.n_sites);
}

double bare_energy(double mu, const ModelParams& p) {
  return 2.0 * p.e0 + bare_energy_offset(mu, p);
}

double bare_amplitude_momentum(int nu, double mu, int n_sites) {
  if (!is_half_integer(mu)) throw std::invalid_argument("mu must be half-integer");
  const double ck = std::cos(constants::two_pi * nu / n_sites);
  const double ckap = std::cos(constants::two_pi * mu / n_sites);
  return std::sqrt(2.0) / n_sites * std::sin(constants::two_pi * mu / n_sites) / (ck - ckap);
}

BareOracleResult bare_oracle(int n_sites, double t) {
  if (n_sites < 4 || n_sites % 2 != 0) throw std::invalid_argument("N must be even and >= 4");
  if (n_sites > 64) throw std::invalid_argument("N exceeds dense oracle budget (64)");
  const int n = n_sites;
  const int dim = n * (n - 1) / 2;

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(dim);
  std::vector<int> pair_index(n * n, -1);
  for (int s1 = 0; s1 < n; ++s1)
    for (int s2 = s1 + 1; s2 < n; ++s2) {
      pair_index[s1 * n + s2] = static_cast<int>(pairs.size());
      pairs.emplace_back(s1, s2);
    }
  auto at = [&](int u, int v) { return pair_index[std::min(u, v) * n + std::max(u, v)]; };

  std::vector<double> h(static_cast<size_t>(dim) * dim, 0.0);
  for (int idx = 0; idx < dim; ++idx) {
    auto [s1, s2] = pairs[idx];
    for (auto [mov, other] : {std::pair{s1, s2}, std::pair{s2, s1}}) {
      for (int dir : {1, -1}) {
        const int dest = (mov + dir + n) % n;
        if (dest == other) continue;  // hard core: move onto the occupied site is absent
        h[static_cast<size_t>(at(dest, other)) * dim + idx] += t;
      }
    }
  }

  double herm = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      herm = std::max(herm, std::abs(h[static_cast<size_t>(i) * dim + j] -
                                     h[static_cast<size_t>(j) * dim + i]));

  std::vector<double> mat = h;
  BareOracleResult out;
  out.hermiticity_residual = herm;
  out.energies = eigh_real_inplace(mat, dim);

  // Translation by one site (s -> s-1 with wrap); [H,T] = 0 exactly, so K is
  // read off as the T eigenphase, with degenerate clusters rotated first.
  std::vector<int> tperm(dim);
  for (int idx = 0; idx < dim; ++idx) {
    auto [s1, s2] = pairs[idx];
    tperm[idx] = at((s1 - 1 + n) % n, (s2 - 1 + n) % n);
  }

  out.k_index.assign(dim, 0);
  const double scale = std::max({std::abs(out.energies.front()), std::abs(out.energies.back()), 1.0});
  int lo = 0;
  while (lo < dim) {
    int hi = lo + 1;
    while (hi < dim && out.energies[hi] - out.energies[hi - 1] < 1e-9 * scale) ++hi;
    const int m = hi - lo;
    std::vector<cplx> tr(static_cast<size_t>(m) * m, 0.0);
    for (int b = 0; b < m; ++b)
      for (int a2 = 0; a2 < m; ++a2) {
        cplx acc = 0.0;
        for (int r = 0; r < dim; ++r)
          acc += mat[static_cast<size_t>(lo + a2) * dim + tperm[r]] *
                 mat[static_cast<size_t>(lo + b) * dim + r];
        tr[static_cast<size_t>(b) * m + a2] = acc;
      }
    std::vector<cplx> phases, rot;
    eig_complex(tr, m, phases, rot);
    for (int b = 0; b < m; ++b) {
      const double ph = std::arg(phases[b]);
      int mi = static_cast<int>(std::lround(ph * n / constants::two_pi));
      if (mi <= -n / 2) mi += n;
      if (mi > n / 2) mi -= n;
      out.k_index[lo + b] = mi;
    }
    lo = hi;
  }

  for (int i = 0; i < dim; ++i)
    if (out.k_index[i] == 0) out.k0_energies.push_back(out.energies[i]);
  std::sort(out.k0_energies.begin(), out.k0_energies.end());
  return out;
}

}  // namespace kinpol
