#pragma once

#include "lorentz/cones.hpp"
#include "lorentz/forms.hpp"
#include "lorentz/matrix.hpp"
#include "lorentz/unipoly.hpp"
#include "lorentz/verdict.hpp"

#include <complex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lorentz {

enum class Conclusion { Stable, Unstable, Inconclusive };

std::string_view to_string(Conclusion c);

/// Stability of dx/dt = A x read off det(tI - A).
template <class T>
struct LTIReport {
    UniPoly<T> char_poly; // monic
    std::vector<std::complex<double>> eigenvalues;
    double spectral_abscissa = 0.0;
    /// Holds when every eigenvalue sits left of -band, fails when one
    /// reaches +band (or det A = 0 exactly), unknown otherwise.
    Verdict eigen_stable;
    Verdict routh_hurwitz;
    /// clc_d_le_4, quintic, alpha_product, alpha_square; out-of-range
    /// degrees are not-applicable.
    std::vector<std::pair<std::string, Verdict>> criteria;
    /// Stable only on a holding Routh-Hurwitz or eigenvalue verdict.
    Conclusion conclusion = Conclusion::Inconclusive;
    /// No criterion holds on a system the eigenvalues show unstable, and
    /// the two deciders do not contradict each other.
    bool consistent = true;

    const Verdict& criterion(const std::string& name) const;
};

/// Errors from the eigenvalue path leave eigen_stable unknown; the exact
/// Routh-Hurwitz verdict is still reported.
template <class T>
LTIReport<T> lti_report(const Matrix<T>& a, const Tolerance& tol = {});

struct RealizationReport {
    /// Holds when det(tI - A) equals the monic normalization of f(x0 + t v);
    /// fails with the first differing coefficient index.
    Verdict verdict;
    /// Sufficient criteria on the restriction: clc_d_le_4 for d <= 4,
    /// quintic and the alpha inequalities for d >= 5.
    std::vector<std::pair<std::string, Verdict>> criteria;
    bool implied_stable = false;
    Verdict eigen_stable;
    /// implied_stable never meets a definitely unstable spectrum.
    bool consistent = true;
};

/// NotInterior unless x0, v are interior to K; DegreeMismatch unless
/// deg f = dim A.
template <class T>
RealizationReport restriction_realization_check(const MultiForm<T>& f, const Cone& k, const std::vector<T>& x0,
                                                const std::vector<T>& v, const Matrix<T>& a,
                                                const Tolerance& tol = {});

} // namespace lorentz
