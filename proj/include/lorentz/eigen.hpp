#pragma once

#include "lorentz/matrix.hpp"
#include "lorentz/scalar.hpp"
#include "lorentz/unipoly.hpp"

#include <complex>
#include <vector>

namespace lorentz {

struct SymmetricEigen {
    std::vector<double> values; // descending
    Matrix<double> vectors;     // column j pairs with values[j]; orthonormal
};

/// Cyclic Jacobi on the symmetrized input. Throws NonConvergence after
/// 100 n^2 sweeps, or when the reconstruction residual exceeds
/// tol.rel * ||M|| + tol.abs.
SymmetricEigen sym_eigs(const Matrix<double>& m, const Tolerance& tol = {});

template <class T>
SymmetricEigen sym_eigs(const Matrix<T>& m, const Tolerance& tol = {})
{
    return sym_eigs(convert<double>(m), tol);
}

/// All eigenvalues of a general real matrix: balancing, Hessenberg
/// reduction and Francis double-shift QR with a budget of 100 n^2 iterations.
std::vector<std::complex<double>> eigenvalues(const Matrix<double>& a);

/// Unit eigenvector for a real eigenvalue by inverse iteration.
std::vector<double> real_eigenvector(const Matrix<double>& a, double lambda);

/// max Re(lambda) over the spectrum.
double spectral_abscissa(const std::vector<std::complex<double>>& eigs);

/// Roots of p from the eigenvalues of its companion matrix, each refined
/// by Newton steps on p. Throws ZeroPolynomial for p = 0 and
/// NonConvergence if a residual |p(r)| exceeds its scaled bound.
template <class T>
std::vector<std::complex<double>> all_roots(const UniPoly<T>& p, const Tolerance& tol = {});

} // namespace lorentz
