#pragma once

#include "lorentz/matrix.hpp"
#include "lorentz/scalar.hpp"
#include "lorentz/verdict.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace lorentz {

enum class ConeKind { Orthant, Polyhedral, SecondOrder };

using RationalVector = std::vector<Rational>;

/// Closed, pointed, solid convex cone in R^n.
///
/// Polyhedral cones keep their generators and facet normals exactly. When
/// no facets are given they are enumerated from the generators for
/// n <= 6; beyond that the caller must supply them. The orthant is stored
/// with the standard basis as both generators and facets. The second-order
/// cone is { x : x_n >= |x_1..x_{n-1}| }.
class Cone {
public:
    static Cone orthant(std::size_t n);
    static Cone second_order(std::size_t n);
    static Cone polyhedral(std::vector<RationalVector> generators, std::vector<RationalVector> facets = {});
    static Cone polyhedral(const std::vector<std::vector<double>>& generators);

    ConeKind kind() const { return kind_; }
    std::size_t dim() const { return n_; }
    bool is_self_dual() const { return kind_ != ConeKind::Polyhedral; }

    /// Generators as given (orthant: standard basis). Empty for second_order.
    const std::vector<RationalVector>& generators() const { return generators_; }
    const std::vector<RationalVector>& facets() const { return facets_; }
    /// Extreme generators, one per ray, exact. Throws Unsupported for second_order.
    const std::vector<RationalVector>& rays() const;

private:
    ConeKind kind_ = ConeKind::Orthant;
    std::size_t n_ = 0;
    std::vector<RationalVector> generators_;
    std::vector<RationalVector> facets_;
    std::vector<RationalVector> rays_;
};

/// Rank of a list of rational row vectors.
std::size_t rank_of(const std::vector<RationalVector>& rows);

template <class T>
bool contains(const Cone& k, const std::vector<T>& x, const Tolerance& tol = {});
template <class T>
bool interior_contains(const Cone& k, const std::vector<T>& x, const Tolerance& tol = {});
template <class T>
bool dual_contains(const Cone& k, const std::vector<T>& y, const Tolerance& tol = {});

/// Unit-length extreme rays. Unsupported for second_order.
std::vector<std::vector<double>> extreme_rays(const Cone& k);

/// Positive combination of all generators with weights 0.05 + Exp(1)
/// (second_order: y ~ N(0, I), x_n = |y| + 0.05 + Exp(1)). Strictly interior.
std::vector<double> sample_interior(const Cone& k, std::uint64_t seed);
std::vector<double> sample_interior(const Cone& k, std::mt19937_64& rng);

/// A point of K: an extreme ray, a combination of a random subset of
/// generators (a face point), or an interior point, with equal odds.
/// second_order: a boundary point (y, |y|) or an interior point.
std::vector<double> sample_cone(const Cone& k, std::uint64_t seed);
std::vector<double> sample_cone(const Cone& k, std::mt19937_64& rng);

enum class DualDirection {
    DualInCone, // K* is contained in K
    ConeInDual, // K is contained in K*
};

/// Exact for polyhedral cones; orthant and second_order are self-dual.
Verdict dual_contained_in(const Cone& k, DualDirection dir);

struct SampleOptions {
    std::size_t trials = 200;
    std::uint64_t seed = 0;
};

/// A K subset of K. Exact over the extreme rays for orthant/polyhedral;
/// refutation over probes and samples for second_order (holds-sampled).
template <class T>
Verdict matrix_k_nonnegative(const Matrix<T>& a, const Cone& k, const Tolerance& tol = {}, SampleOptions opt = {});

/// A (K \ {0}) subset of int K; same exactness split as above.
template <class T>
Verdict matrix_k_positive(const Matrix<T>& a, const Cone& k, const Tolerance& tol = {}, SampleOptions opt = {});

/// (I + A)^{n-1} is K-positive. Throws Inapplicable unless A is
/// K-nonnegative; unknown when that cannot be decided.
template <class T>
Verdict matrix_k_irreducible(const Matrix<T>& a, const Cone& k, const Tolerance& tol = {}, SampleOptions opt = {});

/// Looks for x in K with x^T Q x < 0 (<= 0 when strict) among the
/// extreme rays, their pairwise sums, probes and random cone points.
/// Returns fails with the witness, or unknown; never holds.
template <class T>
Verdict matrix_k_copositive_refute(const Matrix<T>& q, const Cone& k, bool strict, const Tolerance& tol = {},
                                   SampleOptions opt = {});

struct PerronInfo {
    double rho = 0.0;               // max |lambda|
    bool rho_is_eigenvalue = false; // a real eigenvalue sits at +rho
    bool rho_positive = false;
    bool simple = false;            // algebraic multiplicity one
    bool modulus_tie = false;       // another eigenvalue with |lambda| = rho
    std::vector<double> eigenvector;
    bool eigenvector_in_cone = false;
    bool eigenvector_interior = false;
    /// No eigenvector of another real eigenvalue lies in K (either sign).
    bool unique_semipositive = false;
};

struct ConeMatrixReport {
    Verdict k_nonnegative;
    Verdict k_positive;
    Verdict k_irreducible;
    PerronInfo perron;
};

template <class T>
ConeMatrixReport perron_frobenius_check(const Matrix<T>& a, const Cone& k, const Tolerance& tol = {},
                                        SampleOptions opt = {});

} // namespace lorentz
