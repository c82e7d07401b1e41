#include "core/wavepacket.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>

#include "core/bare_exciton.hpp"
#include "core/constants.hpp"
#include "core/dispersion.hpp"
#include "core/grids.hpp"

namespace kinpol {

ABPolaritonPair ab_energy_offsets(double k, const ModelParams& p) {
  const double ep = photon_offset(k, p);
  const double ee = exciton_offset(k, p);
  const double r = std::sqrt((ep - ee) * (ep - ee) + 8.0 * p.big_g * p.big_g);
  return {ep + 0.5 * (ee + ep - r), ep + 0.5 * (ee + ep + r)};
}

ABMixing ab_mixing(double k, const ModelParams& p) {
  const double ep = photon_offset(k, p);
  const double ee = exciton_offset(k, p);
  const auto ab = ab_energy_offsets(k, p);
  ABMixing out;
  auto fill = [&](double lambda, double& xa, double& xb) {
    const double d = lambda - ep - (ep + ee);  // E^{(p,i)} - 2E_p relative part
    // Eigenvector of [[2ep, s2 G], [s2 G, ep+ee]] for eigenvalue lambda is
    // (lambda - ep - ee, sqrt2 G) up to normalization.
    const double da = lambda - (ep + ee);
    const double nb = std::sqrt(2.0) * p.big_g;
    const double norm = std::sqrt(da * da + nb * nb);
    xa = da / norm;
    xb = nb / norm;
    (void)d;
  };
  fill(ab.lower, out.alpha_lower, out.beta_lower);
  fill(ab.upper, out.alpha_upper, out.beta_upper);
  return out;
}

double lambda_kernel(int nu, double mu, int n_sites) {
  const double am = std::abs(mu);
  if (std::abs(2 * am - std::round(2 * am)) > 1e-9 || static_cast<long>(std::lround(2 * am)) % 2 == 0)
    throw std::invalid_argument("mu must be half-integer");
  const double x = M_PI * (nu + am) / n_sites;
  const double y = M_PI * (nu - am) / n_sites;
  return 0.5 * (std::cos(x) / std::sin(x) - std::cos(y) / std::sin(y));
}

std::vector<double> extract_e_mu(const std::vector<double>& c_n, int n_sites) {
  const auto rel = relative_sites(n_sites);
  if (c_n.size() != rel.size()) throw std::invalid_argument("C(n) size != N");
  std::vector<double> out;
  out.reserve(n_sites / 2);
  for (int j = 0; j < n_sites / 2; ++j) {
    const double mu = j + 0.5;
    double acc = 0;
    for (size_t i = 0; i < rel.size(); ++i) acc += bare_amplitude(rel[i], mu, n_sites) * c_n[i];
    out.push_back(0.5 * acc);
  }
  return out;
}

namespace {

struct Channels {
  // Per grid point: branch energies (offset) and signed mixings.
  std::vector<ABPolaritonPair> ab;
  std::vector<ABMixing> mix;
  std::vector<double> p_lower, p_upper;  // xi-coordinates of the state
  std::vector<double> e_mu;
};

Channels decompose(const TwoPolaritonState& st, const ModelParams& p) {
  Channels ch;
  const KGrid grid(p.n_sites, p.lattice_constant);
  const size_t n = grid.values.size();
  ch.ab.reserve(n);
  ch.mix.reserve(n);
  ch.p_lower.resize(n);
  ch.p_upper.resize(n);
  for (size_t i = 0; i < n; ++i) {
    const double k = grid.values[i];
    ch.ab.push_back(ab_energy_offsets(k, p));
    ch.mix.push_back(ab_mixing(k, p));
    ch.p_lower[i] = ch.mix[i].alpha_lower * st.a_k[i] + ch.mix[i].beta_lower * st.b_k[i];
    ch.p_upper[i] = ch.mix[i].alpha_upper * st.a_k[i] + ch.mix[i].beta_upper * st.b_k[i];
  }
  ch.e_mu = extract_e_mu(st.c_n, p.n_sites);
  return ch;
}

}  // namespace

double reconstruct_a0(const TwoPolaritonState& st, const ModelParams& p) {
  const int n = p.n_sites;
  const KGrid grid(n, p.lattice_constant);
  const auto e_mu = extract_e_mu(st.c_n, n);
  const double eps = st.energy_offset;

  double acc = 0;
  for (int i = 0; i < n; ++i) {
    const double k = grid.values[i];
    const auto ab = ab_energy_offsets(k, p);
    const auto mx = ab_mixing(k, p);
    for (auto [lam, xa, xb] : {std::tuple{ab.lower, mx.alpha_lower, mx.beta_lower},
                               std::tuple{ab.upper, mx.alpha_upper, mx.beta_upper}}) {
      if (std::abs(eps - lam) < 1e-9 * p.big_g)
        throw std::domain_error("state degenerate with an AB-polariton level");
      double lam_sum = 0;
      for (int j = 0; j < n / 2; ++j) lam_sum += lambda_kernel(grid.nu[i], j + 0.5, n) * e_mu[j];
      acc += xa * xb / (eps - lam) * lam_sum;
    }
  }
  return 4.0 * p.big_g / (n * std::sqrt(static_cast<double>(n))) * acc;
}

double approx_a0(const TwoPolaritonState& st, const ModelParams& p) {
  const int n = p.n_sites;
  const KGrid grid(n, p.lattice_constant);
  const double mu_hat = st.rho - 0.5;
  if (st.rho < 1 || st.rho > n / 2) throw std::out_of_range("rho outside [1, N/2]");

  double weight = 0;
  for (double c : st.c_k) weight += c * c;
  weight = std::sqrt(weight);
  if (weight == 0) return 0.0;
  const auto e_mu = extract_e_mu(st.c_n, n);
  if (e_mu[st.rho - 1] < 0) weight = -weight;

  const double eps = st.energy_offset;
  double acc = 0;
  for (int i = 0; i < n; ++i) {
    const double k = grid.values[i];
    const auto ab = ab_energy_offsets(k, p);
    const auto mx = ab_mixing(k, p);
    const double lam_val = lambda_kernel(grid.nu[i], mu_hat, n);
    acc += mx.alpha_lower * mx.beta_lower / (eps - ab.lower) * lam_val;
    acc += mx.alpha_upper * mx.beta_upper / (eps - ab.upper) * lam_val;
  }
  return 2.0 * p.big_g * weight / (n * std::sqrt(static_cast<double>(n))) * acc;
}

double reduced_kernel(int nu, int nu_prime, int n_sites) {
  double v = -2.0;
  if (nu == nu_prime) v += n_sites;
  if (nu == -nu_prime || (nu == n_sites / 2 && nu_prime == n_sites / 2)) v += n_sites;
  return v;
}

ChannelResiduals channel_residuals(const TwoPolaritonState& st, const ModelParams& p) {
  const int n = p.n_sites;
  const KGrid grid(n, p.lattice_constant);
  const Channels ch = decompose(st, p);
  const double eps = st.energy_offset;

  double amp_scale = 0;
  for (int i = 0; i < n; ++i)
    amp_scale = std::max({amp_scale, std::abs(ch.p_lower[i]), std::abs(ch.p_upper[i])});
  for (double e : ch.e_mu) amp_scale = std::max(amp_scale, std::abs(e));
  const double scale = p.big_g * std::max(amp_scale, 1e-300);

  ChannelResiduals out;
  for (int i = 0; i < n; ++i) {
    double lam_sum = 0;
    for (int j = 0; j < n / 2; ++j) lam_sum += lambda_kernel(grid.nu[i], j + 0.5, n) * ch.e_mu[j];
    const double rl = (eps - ch.ab[i].lower) * ch.p_lower[i] -
                      4.0 * p.big_g * ch.mix[i].beta_lower / n * lam_sum;
    const double ru = (eps - ch.ab[i].upper) * ch.p_upper[i] -
                      4.0 * p.big_g * ch.mix[i].beta_upper / n * lam_sum;
    out.p_equation = std::max(out.p_equation, std::max(std::abs(rl), std::abs(ru)) / scale);
  }
  for (int j = 0; j < n / 2; ++j) {
    const double mu = j + 0.5;
    const double e_ex = 4.0 * p.t * std::cos(constants::two_pi * mu / n);
    double rhs = 0;
    for (int i = 0; i < n; ++i) {
      const double lam_val = lambda_kernel(grid.nu[i], mu, n);
      rhs += ch.mix[i].beta_lower * lam_val * ch.p_lower[i] +
             ch.mix[i].beta_upper * lam_val * ch.p_upper[i];
    }
    rhs *= p.big_g / n;
    out.e_equation = std::max(out.e_equation, std::abs((eps - e_ex) * ch.e_mu[j] - rhs) / scale);
  }
  return out;
}

double reduced_equation_residual(const TwoPolaritonState& st, const ModelParams& p) {
  if (p.t != 0) throw std::invalid_argument("reduced equation assumes t = 0");
  const int n = p.n_sites;
  const KGrid grid(n, p.lattice_constant);
  const Channels ch = decompose(st, p);
  const double eps = st.energy_offset;

  double amp_scale = 1e-300;
  for (int i = 0; i < n; ++i)
    amp_scale = std::max({amp_scale, std::abs(ch.p_lower[i]), std::abs(ch.p_upper[i])});
  const double scale = p.big_g * amp_scale;

  double worst = 0;
  for (int i = 0; i < n; ++i) {
    for (auto [lam, xb, pv] : {std::tuple{ch.ab[i].lower, ch.mix[i].beta_lower, ch.p_lower[i]},
                               std::tuple{ch.ab[i].upper, ch.mix[i].beta_upper, ch.p_upper[i]}}) {
      double ker = 0;
      for (int j = 0; j < n; ++j) {
        const double fk = reduced_kernel(grid.nu[i], grid.nu[j], n);
        ker += fk * (ch.mix[j].beta_lower * ch.p_lower[j] + ch.mix[j].beta_upper * ch.p_upper[j]);
      }
      const double rhs = p.big_g * p.big_g * xb / (n * eps) * ker;  // E - 2E0 = eps at t=0
      worst = std::max(worst, std::abs((eps - lam) * pv - rhs) / scale);
    }
  }
  return worst;
}

double basis_roundtrip_error(const TwoPolaritonState& st, const ModelParams& p) {
  const int n = p.n_sites;
  const Channels ch = decompose(st, p);
  double worst = 0;
  for (int i = 0; i < n; ++i) {
    const double a = ch.mix[i].alpha_lower * ch.p_lower[i] + ch.mix[i].alpha_upper * ch.p_upper[i];
    const double b = ch.mix[i].beta_lower * ch.p_lower[i] + ch.mix[i].beta_upper * ch.p_upper[i];
    worst = std::max({worst, std::abs(a - st.a_k[i]), std::abs(b - st.b_k[i])});
  }
  const auto rel = relative_sites(n);
  for (size_t s = 0; s < rel.size(); ++s) {
    double c = 0;
    for (int j = 0; j < n / 2; ++j)
      c += 2.0 * ch.e_mu[j] * bare_amplitude(rel[s], j + 0.5, n);
    worst = std::max(worst, std::abs(c - st.c_n[s]));
  }
  return worst;
}

}  // namespace kinpol
