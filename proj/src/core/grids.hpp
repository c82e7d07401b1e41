#pragma once

#include <vector>

namespace kinpol {

// Integer wave-vector grid k_nu = 2 pi nu / (N a), nu in (-N/2, N/2].
struct KGrid {
  int n_sites = 0;
  double lattice_constant = 0;
  std::vector<int> nu;        // (-N/2+1, ..., N/2)
  std::vector<double> values; // k_nu, 1/m

  KGrid() = default;
  KGrid(int n, double a);

  double value_of(int nu_index) const;      // k for a given integer nu
  int index_of(int nu_index) const;         // position in the arrays
};

// Half-integer grid kappa_mu = 2 pi mu / (N a), mu in [-(N-1)/2, (N-1)/2].
// Interlaces KGrid exactly halfway between its points.
struct KappaGrid {
  int n_sites = 0;
  double lattice_constant = 0;
  std::vector<double> mu;     // half-integers, ascending
  std::vector<double> values; // kappa_mu, 1/m

  KappaGrid() = default;
  KappaGrid(int n, double a);

  // The N/2 physically distinct values mu = 1/2, 3/2, ...
  std::vector<double> positive_mu() const;
};

// Relative-separation list n in (-N/2, N/2].
std::vector<int> relative_sites(int n_sites);

}  // namespace kinpol
