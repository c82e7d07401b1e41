#include "core/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "core/constants.hpp"
#include "core/dense_eig.hpp"
#include "core/dispersion.hpp"

namespace kinpol {

using constants::two_pi;

TwoExcitationBasis::TwoExcitationBasis(int n, double a) : n_sites(n), grid(n, a) {
  pp_count = n * (n + 1) / 2;
  pe_count = n * n;
  xx_count = n * (n - 1) / 2;
}

int TwoExcitationBasis::pp_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  // row i, offset within the upper triangle (i <= j)
  return i * n_sites - i * (i - 1) / 2 + (j - i);
}

int TwoExcitationBasis::pe_index(int q, int s) const { return pp_count + q * n_sites + s; }

int TwoExcitationBasis::xx_index(int s1, int s2) const {
  if (s1 > s2) std::swap(s1, s2);
  return pp_count + pe_count + s1 * n_sites - s1 * (s1 + 1) / 2 + (s2 - s1 - 1);
}

std::pair<int, int> TwoExcitationBasis::pp_pair(int idx) const {
  for (int i = 0; i < n_sites; ++i) {
    const int row = i * n_sites - i * (i - 1) / 2;
    if (idx < row + (n_sites - i)) return {i, i + (idx - row)};
  }
  throw std::out_of_range("pp index");
}

std::pair<int, int> TwoExcitationBasis::pe_pair(int idx) const {
  idx -= pp_count;
  return {idx / n_sites, idx % n_sites};
}

std::pair<int, int> TwoExcitationBasis::xx_pair(int idx) const {
  idx -= pp_count + pe_count;
  for (int s1 = 0; s1 < n_sites; ++s1) {
    const int row_len = n_sites - s1 - 1;
    if (idx < row_len) return {s1, s1 + 1 + idx};
    idx -= row_len;
  }
  throw std::out_of_range("xx index");
}

std::vector<cplx> build_hamiltonian(const ModelParams& p, const TwoExcitationBasis& basis) {
  const int n = p.n_sites;
  if (2 * n * n > 8192) throw std::invalid_argument("dense oracle budget is N <= 64");
  const int dim = basis.dimension();
  const double g = p.big_g / std::sqrt(static_cast<double>(n));
  const double a = p.lattice_constant;
  const auto& ks = basis.grid.values;

  std::vector<cplx> h(static_cast<size_t>(dim) * dim, cplx(0.0));
  auto at = [&](int r, int c) -> cplx& { return h[static_cast<size_t>(c) * dim + r]; };
  auto add_coupling = [&](int r, int c, cplx v) {
    at(r, c) += v;
    at(c, r) += std::conj(v);
  };

  std::vector<double> ep(n);
  for (int i = 0; i < n; ++i) ep[i] = photon_offset(ks[i], p);

  // Diagonal (exciton-pair block sits exactly at the subtracted 2E0 carrier).
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) at(basis.pp_index(i, j), basis.pp_index(i, j)) = ep[i] + ep[j];
  for (int q = 0; q < n; ++q)
    for (int s = 0; s < n; ++s) at(basis.pe_index(q, s), basis.pe_index(q, s)) = ep[q];

  // Hopping t; each ordered edge is visited once from each endpoint.
  if (p.t != 0) {
    for (int q = 0; q < n; ++q)
      for (int s = 0; s < n; ++s)
        for (int dir : {1, -1})
          at(basis.pe_index(q, (s + dir + n) % n), basis.pe_index(q, s)) += p.t;
    for (int s1 = 0; s1 < n; ++s1)
      for (int s2 = s1 + 1; s2 < n; ++s2)
        for (auto [mov, oth] : {std::pair{s1, s2}, std::pair{s2, s1}})
          for (int dir : {1, -1}) {
            const int dest = (mov + dir + n) % n;
            if (dest == oth) continue;  // saturated atom blocks the move
            at(basis.xx_index(dest, oth), basis.xx_index(s1, s2)) += p.t;
          }
  }

  // Photon absorption, photon-pair -> photon-exciton.
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double norm = (i == j) ? std::sqrt(2.0) : 1.0;
      const int src = basis.pp_index(i, j);
      for (int s = 0; s < n; ++s) {
        add_coupling(basis.pe_index(i, s), src, g / norm * std::polar(1.0, ks[j] * a * s));
        if (i != j)
          add_coupling(basis.pe_index(j, s), src, g / norm * std::polar(1.0, ks[i] * a * s));
      }
    }

  // Photon-exciton -> exciton pair; only the unexcited atom can absorb.
  for (int q = 0; q < n; ++q)
    for (int s = 0; s < n; ++s) {
      const int src = basis.pe_index(q, s);
      for (int sp = 0; sp < n; ++sp) {
        if (sp == s) continue;
        add_coupling(basis.xx_index(s, sp), src, g * std::polar(1.0, ks[q] * a * sp));
      }
    }
  return h;
}

std::vector<cplx> translate(const TwoExcitationBasis& basis, const std::vector<cplx>& v) {
  const int n = basis.n_sites;
  const double a = basis.grid.lattice_constant;
  const auto& ks = basis.grid.values;
  std::vector<cplx> out(v.size(), cplx(0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const int idx = basis.pp_index(i, j);
      out[idx] = std::polar(1.0, (ks[i] + ks[j]) * a) * v[idx];
    }
  for (int q = 0; q < n; ++q)
    for (int s = 0; s < n; ++s)
      out[basis.pe_index(q, (s - 1 + n) % n)] = std::polar(1.0, ks[q] * a) * v[basis.pe_index(q, s)];
  for (int s1 = 0; s1 < n; ++s1)
    for (int s2 = s1 + 1; s2 < n; ++s2)
      out[basis.xx_index((s1 - 1 + n) % n, (s2 - 1 + n) % n)] = v[basis.xx_index(s1, s2)];
  return out;
}

namespace {

// Relative-momentum photon-pair amplitude of one eigenvector at total
// momentum index m.  Keys are doubled relative indices r2 = nu1 - nu2
// centered into (-N, N]; even r2 on the integer grid, odd on the
// half-integer grid.
std::map<int, cplx> relative_photon_amplitude(const TwoExcitationBasis& basis,
                                              const std::vector<cplx>& vectors, int dim,
                                              int state, int m) {
  const int n = basis.n_sites;
  const cplx* v = vectors.data() + static_cast<size_t>(state) * dim;
  std::map<int, cplx> amp;
  auto center2 = [n](int r2) {
    int c = ((r2 % (2 * n)) + 2 * n) % (2 * n);
    if (c > n) c -= 2 * n;
    return c;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const int nu1 = basis.grid.nu[i], nu2 = basis.grid.nu[j];
      if (((nu1 + nu2 - m) % n + n) % n != 0) continue;
      const cplx val = v[basis.pp_index(i, j)] / (i == j ? 1.0 : std::sqrt(2.0));
      amp[center2(nu1 - nu2)] = val;
      amp[center2(nu2 - nu1)] = val;
    }
  return amp;
}

double merit_from_amplitude(const std::map<int, cplx>& amp, int n) {
  double mean = 0, at_zero = 0;
  for (int rel = -n / 2 + 1; rel <= n / 2; ++rel) {
    cplx acc(0.0);
    for (const auto& [r2, val] : amp) acc += val * std::polar(1.0, M_PI * r2 * rel / n);
    const double mag = std::abs(acc);
    mean += mag;
    if (rel == 0) at_zero = mag;
  }
  mean /= n;
  if (mean == 0) return 0.0;
  return std::max(0.0, (at_zero - mean) / mean);
}

}  // namespace

OracleResult diagonalize(const ModelParams& p) {
  OracleResult r{p, TwoExcitationBasis(p.n_sites, p.lattice_constant), {}, {}, {}, {}, {}, 0.0};
  const int dim = r.basis.dimension();
  const int n = p.n_sites;

  std::vector<cplx> h = build_hamiltonian(p, r.basis);
  for (int i = 0; i < dim; ++i) r.trace += h[static_cast<size_t>(i) * dim + i].real();
  r.energies = eigh_complex_inplace(h, dim);
  r.vectors = std::move(h);

  // Momentum labels; eigh returns arbitrary mixtures inside degenerate
  // clusters (every K pairs with -K), so clusters are rotated into the
  // translation eigenbasis first.
  r.k_index.assign(dim, 0);
  r.k_resolved.assign(dim, 1);
  const double scale = std::max(std::abs(r.energies.front()), std::abs(r.energies.back()));
  const double cluster_tol = 1e-11 * scale * std::sqrt(static_cast<double>(dim));

  int lo = 0;
  while (lo < dim) {
    int hi = lo + 1;
    while (hi < dim && r.energies[hi] - r.energies[hi - 1] < cluster_tol) ++hi;
    const int m = hi - lo;
    std::vector<std::vector<cplx>> tcols(m);
    for (int b = 0; b < m; ++b) {
      std::vector<cplx> col(r.vectors.begin() + static_cast<size_t>(lo + b) * dim,
                            r.vectors.begin() + static_cast<size_t>(lo + b + 1) * dim);
      tcols[b] = translate(r.basis, col);
    }
    if (m > 1) {
      std::vector<cplx> tsub(static_cast<size_t>(m) * m);
      for (int b = 0; b < m; ++b)
        for (int a2 = 0; a2 < m; ++a2) {
          cplx acc(0.0);
          const cplx* va = r.vectors.data() + static_cast<size_t>(lo + a2) * dim;
          for (int row = 0; row < dim; ++row) acc += std::conj(va[row]) * tcols[b][row];
          tsub[static_cast<size_t>(b) * m + a2] = acc;
        }
      std::vector<cplx> phases, rot;
      eig_complex(tsub, m, phases, rot);
      std::vector<cplx> rotated(static_cast<size_t>(m) * dim, cplx(0.0));
      for (int b = 0; b < m; ++b) {
        cplx* dst = rotated.data() + static_cast<size_t>(b) * dim;
        double nrm = 0;
        for (int a2 = 0; a2 < m; ++a2) {
          const cplx w = rot[static_cast<size_t>(b) * m + a2];
          const cplx* src = r.vectors.data() + static_cast<size_t>(lo + a2) * dim;
          for (int row = 0; row < dim; ++row) dst[row] += w * src[row];
        }
        for (int row = 0; row < dim; ++row) nrm += std::norm(dst[row]);
        nrm = std::sqrt(nrm);
        for (int row = 0; row < dim; ++row) dst[row] /= nrm;
      }
      std::copy(rotated.begin(), rotated.end(),
                r.vectors.begin() + static_cast<size_t>(lo) * dim);
      for (int b = 0; b < m; ++b) {
        std::vector<cplx> col(r.vectors.begin() + static_cast<size_t>(lo + b) * dim,
                              r.vectors.begin() + static_cast<size_t>(lo + b + 1) * dim);
        tcols[b] = translate(r.basis, col);
      }
    }
    for (int b = 0; b < m; ++b) {
      cplx expect(0.0);
      const cplx* vb = r.vectors.data() + static_cast<size_t>(lo + b) * dim;
      for (int row = 0; row < dim; ++row) expect += std::conj(vb[row]) * tcols[b][row];
      if (std::abs(expect) < 1.0 - 1e-8) r.k_resolved[lo + b] = 0;
      int mi = static_cast<int>(std::lround(std::arg(expect) * n / two_pi));
      if (mi <= -n / 2) mi += n;
      if (mi > n / 2) mi -= n;
      r.k_index[lo + b] = mi;
    }
    lo = hi;
  }

  r.merit.resize(dim);
  for (int j = 0; j < dim; ++j) {
    const auto amp = relative_photon_amplitude(r.basis, r.vectors, dim, j, r.k_index[j]);
    r.merit[j] = merit_from_amplitude(amp, n);
  }
  return r;
}

std::vector<double> k0_energies(const OracleResult& r) {
  std::vector<double> out;
  for (size_t j = 0; j < r.energies.size(); ++j)
    if (r.k_index[j] == 0) out.push_back(r.energies[j]);
  std::sort(out.begin(), out.end());
  return out;
}

K0Amplitudes extract_k0_amplitudes(const OracleResult& r, int state_index) {
  const TwoExcitationBasis& basis = r.basis;
  const int n = basis.n_sites;
  const int dim = basis.dimension();
  if (r.k_index[state_index] != 0) throw std::invalid_argument("state is not in the K=0 sector");
  const cplx* v = r.vectors.data() + static_cast<size_t>(state_index) * dim;
  const double a = r.params.lattice_constant;
  const auto& ks = basis.grid.values;

  std::vector<cplx> A(n), B(n), C(n);
  for (int i = 0; i < n; ++i) {
    const int nu = basis.grid.nu[i];
    const int j = (nu == n / 2) ? i : basis.grid.index_of(-nu);
    A[i] = v[basis.pp_index(std::min(i, j), std::max(i, j))] / (i == j ? 1.0 : std::sqrt(2.0));
    cplx acc(0.0);
    for (int s = 0; s < n; ++s) acc += v[basis.pe_index(i, s)] * std::polar(1.0, ks[i] * a * s);
    B[i] = acc / std::sqrt(static_cast<double>(n));
  }
  // C(n) from the pair block, then to momentum space.
  std::vector<cplx> c_rel(n, cplx(0.0));
  const auto rel = relative_sites(n);
  auto rel_slot = [&](int d) {
    int rc = ((d % n) + n) % n;
    if (rc > n / 2) rc -= n;
    return static_cast<size_t>(rc + n / 2 - 1);
  };
  for (int s1 = 0; s1 < n; ++s1)
    for (int s2 = s1 + 1; s2 < n; ++s2)
      c_rel[rel_slot(s2 - s1)] = v[basis.xx_index(s1, s2)] * std::sqrt(n / 2.0);
  for (int i = 0; i < n; ++i) {
    cplx acc(0.0);
    for (size_t s = 0; s < rel.size(); ++s)
      acc += c_rel[s] * std::polar(1.0, -ks[i] * a * rel[s]);
    C[i] = acc / std::sqrt(static_cast<double>(n));
  }

  const cplx a0 = A[basis.grid.index_of(0)];
  const cplx phase = std::abs(a0) > 0 ? a0 / std::abs(a0) : cplx(1.0);
  K0Amplitudes out;
  out.a.resize(n);
  out.b.resize(n);
  out.c.resize(n);
  for (int i = 0; i < n; ++i) {
    out.a[i] = (A[i] / phase).real();
    out.b[i] = (B[i] / phase).real();
    out.c[i] = (C[i] / phase).real();
  }
  return out;
}

double oracle_merit(const OracleResult& r, int state_index) { return r.merit[state_index]; }

MeritVsK merit_vs_k(const OracleResult& r, int rho) {
  const int n = r.basis.n_sites;
  const BandEdges edges = band_edges(r.params);
  const double window_top = edges.ll_top_off + 1e-9 * r.params.big_g;

  MeritVsK out;
  for (int m = -n / 2 + 1; m <= n / 2; ++m) {
    std::vector<int> in_band;
    for (size_t j = 0; j < r.energies.size(); ++j)
      if (r.k_index[j] == m && r.energies[j] <= window_top) in_band.push_back(static_cast<int>(j));
    std::sort(in_band.begin(), in_band.end(),
              [&](int x, int y) { return r.energies[x] < r.energies[y]; });
    out.k_index.push_back(m);
    if (static_cast<int>(in_band.size()) >= rho) {
      const int j = in_band[rho - 1];
      out.energy_offset.push_back(r.energies[j]);
      out.merit.push_back(r.merit[j]);
      out.ambiguous.push_back(0);
    } else {
      out.energy_offset.push_back(std::numeric_limits<double>::quiet_NaN());
      out.merit.push_back(std::numeric_limits<double>::quiet_NaN());
      out.ambiguous.push_back(1);
    }
  }
  return out;
}

}  // namespace kinpol
