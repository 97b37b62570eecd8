#pragma once

#include <vector>

#include "tobsusy/grid.hpp"

namespace tobsusy {

// All eigenvalues of a complex upper-Hessenberg matrix (column-major,
// n x n). Used on tridiagonal matrices, which are Hessenberg already,
// skipping the reduction phase of a general dense solve.
std::vector<cplx> hessenberg_eigenvalues(std::vector<cplx> h_colmajor, int n);

}  // namespace tobsusy
