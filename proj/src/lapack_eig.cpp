#include "tobsusy/lapack_eig.hpp"

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

#include <sstream>

namespace tobsusy {

std::vector<cplx> hessenberg_eigenvalues(std::vector<cplx> h, int n) {
    if (n <= 0 || static_cast<std::size_t>(n) * n != h.size())
        throw ValidationError("hessenberg_eigenvalues: bad dimensions");
    std::vector<cplx> w(n);
    const lapack_int info = LAPACKE_zhseqr(
        LAPACK_COL_MAJOR, 'E', 'N', n, 1, n,
        reinterpret_cast<lapack_complex_double*>(h.data()), n,
        reinterpret_cast<lapack_complex_double*>(w.data()), nullptr, std::max(1, n));
    if (info != 0) {
        std::ostringstream os;
        os << "hessenberg_eigenvalues: zhseqr failed with info = " << info;
        throw NumericalError(os.str());
    }
    return w;
}

}  // namespace tobsusy
