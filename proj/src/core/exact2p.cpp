#include "core/exact2p.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "core/constants.hpp"

namespace kinpol {

namespace {

constexpr double kEdgeTol = 1e-9;       // band-edge assignment, units of G
constexpr double kBisectTol = 1e-13;    // relative, offset coordinates
constexpr int kBisectCap = 200;
constexpr double kBoundDecay = 0.5;     // |A(N/2)| / |A(0)| below this = localized

// Kahan-compensated accumulator.
struct Kahan {
  double sum = 0, c = 0;
  void add(double x) {
    const double y = x - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

const char* band_class_name(BandClass c) {
  switch (c) {
    case BandClass::LLBand: return "LL-band";
    case BandClass::Gap: return "gap";
    case BandClass::LUBand: return "LU-band";
    case BandClass::UUBand: return "UU-band";
    case BandClass::BelowBand: return "below-band";
  }
  return "?";
}

SecularFunction::SecularFunction(const ModelParams& p)
    : p_(p), grid_(p.n_sites, p.lattice_constant) {
  const int n = p.n_sites;
  ep_.reserve(n);
  ee_.reserve(n);
  el_.reserve(n);
  eu_.reserve(n);
  for (double k : grid_.values) {
    ep_.push_back(photon_offset(k, p));
    ee_.push_back(exciton_offset(k, p));
    auto [lo, hi] = polariton_offsets(k, p);
    el_.push_back(lo);
    eu_.push_back(hi);
  }

  // Poles over distinct |nu| with the +-k multiplicity folded into the
  // residues; coincident energies across branches merge.
  struct Raw {
    double eps;
    int nu, branch;
    double residue;
  };
  std::vector<Raw> raw;
  for (int nu = 0; nu <= n / 2; ++nu) {
    const int idx = grid_.index_of(nu);
    const double mult = (nu == 0 || nu == n / 2) ? 1.0 : 2.0;
    const double pe[3] = {2 * el_[idx], el_[idx] + eu_[idx], 2 * eu_[idx]};
    for (int b = 0; b < 3; ++b) {
      double denom = 1.0;
      for (int m = 0; m < 3; ++m)
        if (m != b) denom *= pe[b] - pe[m];
      const double k = grid_.values[idx];
      raw.push_back({pe[b], nu, b, mult * phi_offset(pe[b], k, p_) / denom});
    }
  }
  std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) { return a.eps < b.eps; });
  for (const Raw& r : raw) {
    const double merge_tol = 1e-9 * std::max(std::abs(r.eps), p.big_g);
    if (!poles_.empty() && r.eps - poles_.back().eps <= merge_tol) {
      poles_.back().residue += r.residue;
    } else {
      poles_.push_back({r.eps, r.nu, r.branch, r.residue});
    }
  }
}

double SecularFunction::raw(double eps) const {
  Kahan acc;
  for (size_t i = 0; i < grid_.values.size(); ++i) {
    const double k = grid_.values[i];
    acc.add(phi_offset(eps, k, p_) / delta_product_offset(eps, k, p_));
  }
  return acc.sum;
}

SecularValue SecularFunction::operator()(double eps) const {
  return {raw(eps), min_pole_distance(eps) < 1e-6 * p_.big_g};
}

double SecularFunction::min_pole_distance(double eps) const {
  double best = std::numeric_limits<double>::infinity();
  for (const Pole& pl : poles_) best = std::min(best, std::abs(eps - pl.eps));
  return best;
}

double SecularFunction::without_pole(double eps, int pole_index) const {
  const Pole& target = poles_[pole_index];
  Kahan acc;
  for (size_t i = 0; i < grid_.values.size(); ++i) {
    const double k = grid_.values[i];
    const double pe[3] = {2 * el_[i], el_[i] + eu_[i], 2 * eu_[i]};
    bool has_target = false;
    for (int b = 0; b < 3; ++b)
      if (std::abs(pe[b] - target.eps) <= 1e-9 * std::max(std::abs(target.eps), p_.big_g))
        has_target = true;
    if (!has_target) {
      acc.add(phi_offset(eps, k, p_) / delta_product_offset(eps, k, p_));
      continue;
    }
    for (int b = 0; b < 3; ++b) {
      if (std::abs(pe[b] - target.eps) <= 1e-9 * std::max(std::abs(target.eps), p_.big_g)) continue;
      double denom = 1.0;
      for (int m = 0; m < 3; ++m)
        if (m != b) denom *= pe[b] - pe[m];
      acc.add(phi_offset(pe[b], k, p_) / denom / (eps - pe[b]));
    }
  }
  return acc.sum;
}

Amplitudes amplitudes_at(double eps, const ModelParams& p) {
  const KGrid grid(p.n_sites, p.lattice_constant);
  const double g2 = p.big_g * p.big_g;
  const size_t n = grid.values.size();
  Amplitudes out;
  out.a.resize(n);
  out.b.resize(n);
  out.c.resize(n);
  Kahan norm;
  for (size_t i = 0; i < n; ++i) {
    const double k = grid.values[i];
    const double d = delta_product_offset(eps, k, p);
    const double ph = phi_offset(eps, k, p);
    const double e2p = eps - 2 * photon_offset(k, p);
    out.a[i] = 2 * g2 / d;
    out.b[i] = std::sqrt(2.0) * p.big_g * e2p / d;
    out.c[i] = ph / d;
    norm.add((ph * ph + 2 * g2 * e2p * e2p + 4 * g2 * g2) / (d * d));
  }
  double c_rho = 1.0 / std::sqrt(norm.sum);
  // Canonical sign: A(k=0) > 0.
  const size_t zero = static_cast<size_t>(grid.index_of(0));
  if (out.a[zero] < 0) c_rho = -c_rho;
  for (size_t i = 0; i < n; ++i) {
    out.a[i] *= c_rho;
    out.b[i] *= c_rho;
    out.c[i] *= c_rho;
  }
  return out;
}

std::vector<double> to_real_space(const std::vector<double>& xk, const KGrid& grid) {
  const int n = grid.n_sites;
  if (xk.size() != static_cast<size_t>(n)) throw std::invalid_argument("amplitude size != N");
  std::vector<double> out;
  out.reserve(n);
  const double inv = 1.0 / std::sqrt(static_cast<double>(n));
  for (int rel : relative_sites(n)) {
    Kahan acc;
    for (int i = 0; i < n; ++i)
      acc.add(xk[i] * std::cos(constants::two_pi * grid.nu[i] * rel / n));
    out.push_back(acc.sum * inv);
  }
  return out;
}

double k_eff(int rho, int n_sites, double lattice_constant) {
  if (rho < 1 || rho > n_sites / 2) throw std::out_of_range("rho outside [1, N/2]");
  const double rho_star = (rho - 1) * (n_sites / 2.0 - 0.5) / (n_sites / 2.0 - 1.0);
  return constants::two_pi * rho_star / (n_sites * lattice_constant);
}

double bunching_merit(const std::vector<double>& a_n, const std::vector<int>& rel_sites) {
  if (a_n.size() != rel_sites.size()) throw std::invalid_argument("size mismatch");
  double mean = 0, at_zero = 0;
  for (size_t i = 0; i < a_n.size(); ++i) {
    mean += std::abs(a_n[i]);
    if (rel_sites[i] == 0) at_zero = std::abs(a_n[i]);
  }
  mean /= static_cast<double>(a_n.size());
  if (mean == 0) return 0.0;
  return std::max(0.0, (at_zero - mean) / mean);
}

namespace {

struct RootFind {
  double eps = 0;
  RootStatus status = RootStatus::Bisected;
};

RootFind locate_root(const SecularFunction& f, int left_pole, int right_pole) {
  const auto& poles = f.poles();
  const double lo = poles[left_pole].eps, hi = poles[right_pole].eps;
  const double w = hi - lo;
  static const double margins[] = {0.25, 0.1, 1e-2, 1e-3, 1e-4, 1e-6, 1e-8, 1e-10, 1e-12};

  // F decreases from +inf at lo to -inf at hi; find a sign-definite pair.
  double a = std::numeric_limits<double>::quiet_NaN();
  double b = std::numeric_limits<double>::quiet_NaN();
  for (double m : margins) {
    const double x = lo + m * w;
    if (std::isnan(a) && f.raw(x) > 0) a = x;
    const double y = hi - m * w;
    if (std::isnan(b) && f.raw(y) < 0) b = y;
    if (!std::isnan(a) && !std::isnan(b) && a < b) break;
  }

  if (!std::isnan(a) && !std::isnan(b) && a < b) {
    for (int it = 0; it < kBisectCap; ++it) {
      const double mid = 0.5 * (a + b);
      if (f.raw(mid) > 0)
        a = mid;
      else
        b = mid;
      if (b - a <= kBisectTol * std::max({std::abs(a), std::abs(b), 1.0})) break;
    }
    return {0.5 * (a + b), RootStatus::Bisected};
  }

  // The sign change is numerically invisible: the root clings to one pole.
  // Near pole P the function is r/(eps-P) + F_rest, so the root sits at
  // P - r/F_rest(P).
  struct Cand {
    double displacement, eps;
  };
  std::vector<Cand> cands;
  for (int side : {left_pole, right_pole}) {
    const double r = poles[side].residue;
    const double rest = f.without_pole(poles[side].eps, side);
    if (rest == 0 || !std::isfinite(rest)) continue;
    const double eps = poles[side].eps - r / rest;
    if (eps > lo && eps < hi) cands.push_back({std::abs(r / rest), eps});
  }
  if (!cands.empty()) {
    auto best = std::min_element(cands.begin(), cands.end(),
                                 [](const Cand& x, const Cand& y) { return x.displacement < y.displacement; });
    return {best->eps, RootStatus::PolePinned};
  }
  return {0.5 * (lo + hi), RootStatus::Unresolved};
}

BandClass classify(double eps, const BandEdges& e, double edge_tol) {
  if (eps < e.ll_bottom_off - edge_tol) return BandClass::BelowBand;
  if (eps <= e.ll_top_off + edge_tol) return BandClass::LLBand;
  if (eps < e.lu_bottom_off - edge_tol) return BandClass::Gap;
  if (eps <= e.lu_top_off + edge_tol) return BandClass::LUBand;
  if (eps < e.uu_bottom_off - edge_tol) return BandClass::Gap;
  return BandClass::UUBand;
}

}  // namespace

SpectrumK0 solve_spectrum(const ModelParams& p) {
  if (!(p.big_g > 0)) throw std::invalid_argument("solve_spectrum requires G > 0");
  SpectrumK0 sp;
  sp.params = p;
  sp.grid = KGrid(p.n_sites, p.lattice_constant);
  sp.rel_sites = relative_sites(p.n_sites);
  sp.edges = band_edges(p);

  const SecularFunction f(p);
  const auto& poles = f.poles();
  const double edge_tol = kEdgeTol * p.big_g;

  std::vector<RootFind> roots;
  for (size_t i = 0; i + 1 < poles.size(); ++i) {
    RootFind r = locate_root(f, static_cast<int>(i), static_cast<int>(i + 1));
    if (r.status == RootStatus::Unresolved) ++sp.unresolved_intervals;
    roots.push_back(r);
  }

  const size_t zero_idx = static_cast<size_t>(sp.grid.index_of(0));
  for (const RootFind& r : roots) {
    TwoPolaritonState st;
    st.energy_offset = r.eps;
    st.status = r.status;
    st.band = classify(r.eps, sp.edges, edge_tol);

    double eps_eval = r.eps;
    if (f.min_pole_distance(eps_eval) == 0.0)
      eps_eval += std::max(1e-12 * std::abs(eps_eval), 1e-9);  // evaluate the limit just off the pole
    Amplitudes amp = amplitudes_at(eps_eval, p);
    st.a_k = std::move(amp.a);
    st.b_k = std::move(amp.b);
    st.c_k = std::move(amp.c);
    st.a_n = to_real_space(st.a_k, sp.grid);
    st.b_n = to_real_space(st.b_k, sp.grid);
    st.c_n = to_real_space(st.c_k, sp.grid);
    st.merit = bunching_merit(st.a_n, sp.rel_sites);
    (void)zero_idx;
    sp.states.push_back(std::move(st));
  }

  std::sort(sp.states.begin(), sp.states.end(),
            [](const TwoPolaritonState& x, const TwoPolaritonState& y) {
              return x.energy_offset < y.energy_offset;
            });

  // Bound bipolariton detector: an in-gap root whose photon-pair amplitude
  // has decayed at maximal separation and peaks at contact.  Extended
  // band-edge states keep |A(N/2)| ~ |A(0)| and stay with the LU band.
  const int n = p.n_sites;
  const size_t i_zero = static_cast<size_t>(n / 2 - 1);  // n = 0 slot in rel_sites
  const size_t i_edge = static_cast<size_t>(n - 1);      // n = N/2 slot
  for (TwoPolaritonState& st : sp.states) {
    if (st.band != BandClass::Gap) continue;
    const double a0 = std::abs(st.a_n[i_zero]);
    const double ae = std::abs(st.a_n[i_edge]);
    size_t pk_a = 0, pk_b = 0, pk_c = 0;
    for (size_t i = 0; i < st.a_n.size(); ++i) {
      if (std::abs(st.a_n[i]) > std::abs(st.a_n[pk_a])) pk_a = i;
      if (std::abs(st.b_n[i]) > std::abs(st.b_n[pk_b])) pk_b = i;
      if (std::abs(st.c_n[i]) > std::abs(st.c_n[pk_c])) pk_c = i;
    }
    const bool peaks_at_contact = sp.rel_sites[pk_a] == 0 && sp.rel_sites[pk_b] == 0 &&
                                  std::abs(sp.rel_sites[pk_c]) == 1;
    if (a0 > 0 && ae < kBoundDecay * a0 && peaks_at_contact) {
      st.bound_gap_state = true;
    } else {
      st.band = BandClass::LUBand;  // merged with the band above
    }
  }

  // Per-band 1-based indices and the LL-band observables.
  int counts[5] = {0, 0, 0, 0, 0};
  for (TwoPolaritonState& st : sp.states) {
    st.rho = ++counts[static_cast<int>(st.band)];
    if (st.band == BandClass::LLBand && st.rho <= n / 2) {
      st.k_eff = k_eff(st.rho, n, p.lattice_constant);
      const double weight = lower_photon_weight(st.k_eff, p);
      st.merit_scaled = weight > 1e-12 ? st.merit / weight
                                       : std::numeric_limits<double>::quiet_NaN();
    } else {
      st.k_eff = std::numeric_limits<double>::quiet_NaN();
      st.merit_scaled = std::numeric_limits<double>::quiet_NaN();
    }
  }

  for (int nu = 1; nu < n / 2; ++nu) {
    const double k = sp.grid.value_of(nu);
    sp.antisym_offsets.push_back(photon_offset(k, p) + exciton_offset(k, p));
  }
  std::sort(sp.antisym_offsets.begin(), sp.antisym_offsets.end());
  return sp;
}

std::vector<TwoPolaritonState> gap_states(const SpectrumK0& spectrum) {
  std::vector<TwoPolaritonState> out;
  for (const TwoPolaritonState& st : spectrum.states)
    if (st.bound_gap_state) out.push_back(st);
  return out;
}

double coupled_equation_residual(const TwoPolaritonState& st, const SpectrumK0& sp) {
  const ModelParams& p = sp.params;
  const int n = p.n_sites;
  const double g = p.big_g;
  const double eps = st.energy_offset;

  Kahan sb, sc;
  for (int i = 0; i < n; ++i) {
    sb.add(st.b_k[i]);
    sc.add(st.c_k[i] * std::cos(p.lattice_constant * sp.grid.values[i]));
  }
  const double s_term = -std::sqrt(2.0) * g / n * sb.sum - 4.0 * p.t / n * sc.sum;

  double scale = 2 * g;
  double res2 = 0;
  for (int i = 0; i < n; ++i) {
    const double k = sp.grid.values[i];
    const double ep = photon_offset(k, p);
    const double ee = exciton_offset(k, p);
    scale = std::max({scale, std::abs(2 * ep), std::abs(ep + ee), std::abs(eps)});
    const double r1 = (2 * ep - eps) * st.a_k[i] + std::sqrt(2.0) * g * st.b_k[i];
    const double r2 = (ep + ee - eps) * st.b_k[i] + std::sqrt(2.0) * g * (st.a_k[i] + st.c_k[i]);
    const double r3 = (2 * ee - eps) * st.c_k[i] + std::sqrt(2.0) * g * st.b_k[i] + s_term;
    res2 += r1 * r1 + r2 * r2 + r3 * r3;
  }
  return std::sqrt(res2) / scale;
}

}  // namespace kinpol
