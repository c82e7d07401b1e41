#pragma once

#include <complex>
#include <vector>

namespace kinpol {

using cplx = std::complex<double>;

// Column-major dense matrices, minimal wrappers over LAPACKE.

// Real symmetric eigensystem; `a` is n*n column-major, overwritten with the
// eigenvectors (columns).  Returns ascending eigenvalues.
std::vector<double> eigh_real_inplace(std::vector<double>& a, int n);

// Complex Hermitian eigensystem, same layout contract.
std::vector<double> eigh_complex_inplace(std::vector<cplx>& a, int n);

// General complex eigenvalues + right eigenvectors (for small normal blocks).
void eig_complex(const std::vector<cplx>& a, int n, std::vector<cplx>& eigenvalues,
                 std::vector<cplx>& eigenvectors);

}  // namespace kinpol
