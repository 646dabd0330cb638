#pragma once

#include "lorentz/cones.hpp"
#include "lorentz/matrix.hpp"
#include "lorentz/scalar.hpp"
#include "lorentz/unipoly.hpp"
#include "lorentz/verdict.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lorentz {

using Exponent = std::vector<unsigned>;

/// Homogeneous form of degree d in n variables, stored sparsely as
/// exponent vector -> nonzero coefficient.
template <class T>
class MultiForm {
public:
    MultiForm(std::size_t n, std::size_t d) : n_(n), d_(d) {}
    MultiForm(std::size_t n, std::size_t d, const std::vector<std::pair<Exponent, T>>& terms) : n_(n), d_(d)
    {
        for (const auto& [e, c] : terms) add_term(e, c);
    }

    /// Adds c x^e; repeated exponents accumulate. Throws DimensionMismatch
    /// or WrongDegree when e does not fit the form.
    void add_term(const Exponent& e, const T& c);

    std::size_t n() const { return n_; }
    std::size_t d() const { return d_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponent, T>& terms() const { return terms_; }
    T coeff(const Exponent& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? T(0) : it->second;
    }

    friend bool operator==(const MultiForm& a, const MultiForm& b)
    {
        return a.n_ == b.n_ && a.d_ == b.d_ && a.terms_ == b.terms_;
    }

private:
    std::size_t n_;
    std::size_t d_;
    std::map<Exponent, T> terms_;
};

template <class T>
MultiForm<T> operator+(const MultiForm<T>& a, const MultiForm<T>& b);

template <class U, class T>
MultiForm<U> convert(const MultiForm<T>& f);

template <class T>
T eval(const MultiForm<T>& f, const std::vector<T>& x);

template <class T>
MultiForm<T> partial_derivative(const MultiForm<T>& f, std::size_t i);

/// D_v f = sum v_i df/dx_i. WrongDegree for d = 0.
template <class T>
MultiForm<T> dir_derivative(const MultiForm<T>& f, const std::vector<T>& v);

/// Matrix of second partials at a. WrongDegree for d < 2.
template <class T>
Matrix<T> hessian_at(const MultiForm<T>& f, const std::vector<T>& a);

/// t -> f(x + t v), a_k = D_v^k f(x) / k!. Computed by iterated
/// derivatives and by binomial expansion of every term; InternalMismatch
/// if the two disagree (exactly for rationals, within tol otherwise).
template <class T>
UniPoly<T> restrict_line(const MultiForm<T>& f, const std::vector<T>& x, const std::vector<T>& v,
                         const Tolerance& tol = {});

struct FormReport {
    std::string property;
    Verdict verdict;
    std::size_t samples = 0;
    /// Eigenvalues behind the verdict: the witness when refuted, the
    /// last examined matrix otherwise.
    std::vector<double> eigenvalues;
    std::vector<std::pair<std::string, Verdict>> details;
    std::vector<std::pair<std::string, std::size_t>> counts;
};

/// Exactly one positive eigenvalue plus the cone condition: y^T Q x >= 0
/// over pairs of extreme rays (exact) or x^T Q x > 0 on sampled interior
/// points of a second-order cone. On self-dual cones the details also
/// carry K-nonnegativity and the nonsingular-irreducible / singular-
/// nonnegative dichotomy.
template <class T>
FormReport quadratic_lorentzian_check(const Matrix<T>& q, const Cone& k, const Tolerance& tol = {},
                                      SampleOptions opt = {});

/// Reduces f to quadratics D_{a_1} ... D_{a_{d-2}} f over sampled tuples
/// in int K. Forms of degree <= 1 are checked for nonnegativity on K.
template <class T>
FormReport lorentzian_sample_check(const MultiForm<T>& f, const Cone& k, const Tolerance& tol = {},
                                   SampleOptions opt = {});

/// For sampled x, v in int K: positive coefficients of f(x + t v) and a
/// log-concave sequence D_v^k f(x).
template <class T>
FormReport clc_necessary_check(const MultiForm<T>& f, const Cone& k, const Tolerance& tol = {},
                               SampleOptions opt = {});

/// Exactly one positive Hessian eigenvalue at sampled a in int K; on
/// self-dual cones also the dichotomy and the Perron-Frobenius check.
template <class T>
FormReport hessian_signature_check(const MultiForm<T>& f, const Cone& k, const Tolerance& tol = {},
                                   SampleOptions opt = {});

struct LineProbe {
    std::vector<double> x;
    std::vector<double> v;
};

/// Routh-Hurwitz on f(x + t v) for the given probes (x, v in int K,
/// NotInterior otherwise) and for sampled pairs.
template <class T>
FormReport hurwitz_over_cone_check(const MultiForm<T>& f, const Cone& k, const Tolerance& tol = {},
                                   SampleOptions opt = {}, const std::vector<LineProbe>& probes = {});

/// D_b f and D_c g are the same nonzero form.
template <class T>
bool verify_sum_condition(const MultiForm<T>& f, const MultiForm<T>& g, const std::vector<T>& b,
                          const std::vector<T>& c, const Tolerance& tol = {});

/// Number of eigenvalues above / below the band of a symmetric matrix,
/// exact for rationals (sign changes of the real-rooted characteristic
/// polynomial).
struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
};

template <class T>
Inertia inertia(const Matrix<T>& q, const Tolerance& tol = {});

} // namespace lorentz
