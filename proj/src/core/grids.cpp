#include "core/grids.hpp"

#include <cmath>
#include <stdexcept>

#include "core/constants.hpp"

namespace kinpol {

KGrid::KGrid(int n, double a) : n_sites(n), lattice_constant(a) {
  nu.reserve(n);
  values.reserve(n);
  for (int v = -n / 2 + 1; v <= n / 2; ++v) {
    nu.push_back(v);
    values.push_back(constants::two_pi * v / (n * a));
  }
}

double KGrid::value_of(int nu_index) const {
  return constants::two_pi * nu_index / (n_sites * lattice_constant);
}

int KGrid::index_of(int nu_index) const {
  if (nu_index < -n_sites / 2 + 1 || nu_index > n_sites / 2)
    throw std::out_of_range("nu outside (-N/2, N/2]");
  return nu_index + n_sites / 2 - 1;
}

KappaGrid::KappaGrid(int n, double a) : n_sites(n), lattice_constant(a) {
  mu.reserve(n);
  values.reserve(n);
  for (int j = 0; j < n; ++j) {
    const double m = -(n - 1) / 2.0 + j;
    mu.push_back(m);
    values.push_back(constants::two_pi * m / (n * a));
  }
}

std::vector<double> KappaGrid::positive_mu() const {
  std::vector<double> out;
  out.reserve(n_sites / 2);
  for (double m : mu)
    if (m > 0) out.push_back(m);
  return out;
}

std::vector<int> relative_sites(int n_sites) {
  std::vector<int> out;
  out.reserve(n_sites);
  for (int n = -n_sites / 2 + 1; n <= n_sites / 2; ++n) out.push_back(n);
  return out;
}

}  // namespace kinpol
