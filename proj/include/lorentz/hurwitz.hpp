#pragma once

#include "lorentz/matrix.hpp"
#include "lorentz/scalar.hpp"
#include "lorentz/unipoly.hpp"
#include "lorentz/verdict.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace lorentz {

/// d x d matrix with M[i][j] = a_{2j-i} (1-based), a_k = 0 outside 0..d.
template <class T>
Matrix<T> hurwitz_matrix(const UniPoly<T>& p);

/// Leading principal minors of the Hurwitz matrix of p after the sign of
/// p is normalized so that a_d > 0. Entry k-1 holds Delta_k.
template <class T>
std::vector<T> hurwitz_minors(const UniPoly<T>& p);

/// min_k |Delta_k| / H_k over k = 1..d-1, H_k the Hadamard bound of the
/// k-th leading block. +inf when d <= 1.
template <class T>
double minor_margin(const UniPoly<T>& p);

template <class T>
Verdict routh_hurwitz_stable(const UniPoly<T>& p, const Tolerance& tol = {});

/// variant 1: a_d, a_{d-2}, ... > 0 with Delta_1, Delta_3, ... > 0
/// variant 2: a_d, a_{d-2}, ... > 0 with Delta_2, Delta_4, ... > 0
/// variant 3: a_d, a_{d-1}, a_{d-3}, ... > 0 with Delta_1, Delta_3, ... > 0
/// variant 4: a_d, a_{d-1}, a_{d-3}, ... > 0 with Delta_2, Delta_4, ... > 0
/// Minors run up to Delta_d. a_0 <= 0 fails outright.
template <class T>
Verdict lienard_chipart_stable(const UniPoly<T>& p, int variant, const Tolerance& tol = {});

/// Stable iff the zeros of f_e and of s f_o (s = w^2) are real, simple and
/// interlace as 0 < e_1 < o_1 < e_2 < ... where 0 comes from s f_o.
template <class T>
Verdict hermite_biehler_stable(const UniPoly<T>& p, const Tolerance& tol = {});

/// One step of the degree reduction: drops a_d, subtracts
/// (a_d/a_{d-1}) a_{k-1} from every a_k with k = d mod 2, k < d.
template <class T>
UniPoly<T> reduce_degree(const UniPoly<T>& p);

template <class T>
Verdict degree_reduction_stable(const UniPoly<T>& p, const Tolerance& tol = {});

/// Ground truth from all_roots: holds when max Re(root) < -band, fails
/// when it exceeds +band or p(0) = 0 exactly, unknown otherwise.
template <class T>
Verdict root_oracle_stable(const UniPoly<T>& p, const Tolerance& tol = {});

/// Strict Newton inequalities with positive coefficients, 1 <= d <= 4.
template <class T>
Verdict clc_d_le_4_criterion(const UniPoly<T>& p, const Tolerance& tol = {});

/// Strict Newton inequalities plus the cross inequality, d = 5.
template <class T>
Verdict quintic_criterion(const UniPoly<T>& p, const Tolerance& tol = {});

/// Positive root of t^3 - t^2 - 2t - 1.
double alpha_constant();

enum class AlphaMode { Product, Square };

/// Product: a_k a_{k+1} >= alpha a_{k-1} a_{k+2}.
/// Square:  a_k^2 >= sqrt(alpha) a_{k-1} a_{k+1}.
/// Both for 1 <= k <= d-1. Exact inputs are compared through the sign of
/// the defining cubic, so no rounding of alpha enters.
template <class T>
Verdict alpha_criterion(const UniPoly<T>& p, AlphaMode mode, const Tolerance& tol = {});

struct StabilityReport {
    std::vector<std::pair<std::string, Verdict>> deciders;
    std::vector<std::pair<std::string, Verdict>> criteria;
    std::vector<std::string> minors; // exact text for rationals, %.17g otherwise
    double minor_margin = 0.0;
    std::vector<std::complex<double>> roots;
    /// No decider or criterion contradicts a definite root-oracle verdict.
    bool consistent = true;

    const Verdict& decider(const std::string& name) const;
    const Verdict& criterion(const std::string& name) const;
};

template <class T>
StabilityReport stability_report(const UniPoly<T>& p, const Tolerance& tol = {});

} // namespace lorentz
