#pragma once

#include "lorentz/scalar.hpp"
#include "lorentz/unipoly.hpp"
#include "lorentz/verdict.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lorentz {

/// All entries positive and a_k^2 >= a_{k-1} a_{k+1} for interior k
/// (strict: >). Sequences of length 1 or 2 only need positivity.
template <class T>
Verdict is_log_concave(const std::vector<T>& seq, bool strict, const Tolerance& tol = {});

/// c_0..c_n nonnegative with (c_k/C(n,k))^2 >= (c_{k-1}/C(n,k-1)) (c_{k+1}/C(n,k+1)).
template <class T>
Verdict is_ultra_log_concave(const std::vector<T>& seq, bool strict, const Tolerance& tol = {});

/// Complete log-concavity of p on t >= 0: a_i > 0 for all i and
/// i a_i^2 >= (i+1) a_{i-1} a_{i+1}, 1 <= i <= d-1. The zero polynomial
/// holds non-strictly and fails strictly.
template <class T>
Verdict is_univariate_clc(const UniPoly<T>& p, bool strict, const Tolerance& tol = {});

struct NewtonChainReport {
    Verdict hypothesis;
    std::vector<std::pair<std::string, Verdict>> families;
};

/// Checks the hypothesis a_k^2 >= ((k+1)/k) a_{k-1} a_{k+1} and then every
/// inequality family it implies. Throws Inapplicable (with the index) when
/// an entry is not positive or the hypothesis definitely fails.
template <class T>
NewtonChainReport newton_chain_report(const std::vector<T>& seq, const Tolerance& tol = {});

/// (a1 a4 - a0 a5)^2 < (a1 a2 - a0 a3)(a3 a4 - a2 a5) for a quintic with
/// positive coefficients. WrongDegree unless deg p = 5; Inapplicable on a
/// nonpositive coefficient.
template <class T>
Verdict quintic_cross_inequality(const UniPoly<T>& p, const Tolerance& tol = {});

/// Strict or non-strict Newton inequalities a_k^2 >= ((k+1)/k) a_{k-1} a_{k+1},
/// 1 <= k <= d-1, together with positivity of every coefficient.
template <class T>
Verdict newton_inequalities(const std::vector<T>& a, bool strict, const Tolerance& tol = {});

} // namespace lorentz
