#include "core/dense_eig.hpp"

#include <lapacke.h>

#include <stdexcept>

namespace kinpol {

std::vector<double> eigh_real_inplace(std::vector<double>& a, int n) {
  std::vector<double> w(n);
  const int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, a.data(), n, w.data());
  if (info != 0) throw std::runtime_error("dsyevd failed, info=" + std::to_string(info));
  return w;
}

std::vector<double> eigh_complex_inplace(std::vector<cplx>& a, int n) {
  std::vector<double> w(n);
  const int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                                  reinterpret_cast<lapack_complex_double*>(a.data()), n, w.data());
  if (info != 0) throw std::runtime_error("zheevd failed, info=" + std::to_string(info));
  return w;
}

void eig_complex(const std::vector<cplx>& a, int n, std::vector<cplx>& eigenvalues,
                 std::vector<cplx>& eigenvectors) {
  std::vector<cplx> work = a;
  eigenvalues.assign(n, 0.0);
  eigenvectors.assign(static_cast<size_t>(n) * n, 0.0);
  const int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'V', n,
                                 reinterpret_cast<lapack_complex_double*>(work.data()), n,
                                 reinterpret_cast<lapack_complex_double*>(eigenvalues.data()),
                                 nullptr, 1,
                                 reinterpret_cast<lapack_complex_double*>(eigenvectors.data()), n);
  if (info != 0) throw std::runtime_error("zgeev failed, info=" + std::to_string(info));
}

}  // namespace kinpol
