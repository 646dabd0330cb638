#include "lorentz/eigen.hpp"

#include "lorentz/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace lorentz {

SymmetricEigen sym_eigs(const Matrix<double>& input, const Tolerance& tol)
{
    validate(tol);
    const std::size_t n = input.size();
    Matrix<double> a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (input(i, j) + input(j, i));
    Matrix<double> v = Matrix<double>::identity(n);

    const double norm = frobenius_norm(a);
    const double eps = std::numeric_limits<double>::epsilon();
    const std::size_t budget = std::max<std::size_t>(1, 100 * n * n);
    bool converged = false;
    for (std::size_t sweep = 0; sweep < budget; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        if (std::sqrt(off) <= eps * norm || off == 0.0) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    if (!converged) throw NonConvergence("Jacobi iteration exceeded its sweep budget");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

    SymmetricEigen out{std::vector<double>(n), Matrix<double>(n)};
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]);
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }

    // ||M - V diag V^T||_F against the symmetrized input
    double resid = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double r = 0.5 * (input(i, j) + input(j, i));
            for (std::size_t k = 0; k < n; ++k) r -= out.vectors(i, k) * out.values[k] * out.vectors(j, k);
            resid += r * r;
        }
    if (std::sqrt(resid) > tol.rel * norm + tol.abs + 64 * n * eps * norm) {
        throw NonConvergence("symmetric eigendecomposition residual too large");
    }
    return out;
}

namespace {

// 1-based square storage so the QR sweep below reads like its textbook form.
struct Work {
    explicit Work(std::size_t n) : n(n), d((n + 1) * (n + 1), 0.0) {}
    double& operator()(std::size_t i, std::size_t j) { return d[i * (n + 1) + j]; }
    std::size_t n;
    std::vector<double> d;
};

void balance(Work& a)
{
    constexpr double radix = 2.0;
    constexpr double sqrdx = radix * radix;
    const std::size_t n = a.n;
    bool done = false;
    while (!done) {
        done = true;
        for (std::size_t i = 1; i <= n; ++i) {
            double r = 0.0, c = 0.0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (j == i) continue;
                c += std::fabs(a(j, i));
                r += std::fabs(a(i, j));
            }
            if (c != 0.0 && r != 0.0) {
                double g = r / radix;
                double f = 1.0;
                const double s = c + r;
                while (c < g) {
                    f *= radix;
                    c *= sqrdx;
                }
                g = r * radix;
                while (c > g) {
                    f /= radix;
                    c /= sqrdx;
                }
                if ((c + r) / f < 0.95 * s) {
                    done = false;
                    g = 1.0 / f;
                    for (std::size_t j = 1; j <= n; ++j) a(i, j) *= g;
                    for (std::size_t j = 1; j <= n; ++j) a(j, i) *= f;
                }
            }
        }
    }
}

void to_hessenberg(Work& a)
{
    const std::size_t n = a.n;
    for (std::size_t m = 2; m < n; ++m) {
        double x = 0.0;
        std::size_t i = m;
        for (std::size_t j = m; j <= n; ++j) {
            if (std::fabs(a(j, m - 1)) > std::fabs(x)) {
                x = a(j, m - 1);
                i = j;
            }
        }
        if (i != m) {
            for (std::size_t j = m - 1; j <= n; ++j) std::swap(a(i, j), a(m, j));
            for (std::size_t j = 1; j <= n; ++j) std::swap(a(j, i), a(j, m));
        }
        if (x != 0.0) {
            for (i = m + 1; i <= n; ++i) {
                double y = a(i, m - 1);
                if (y != 0.0) {
                    y /= x;
                    a(i, m - 1) = y;
                    for (std::size_t j = m; j <= n; ++j) a(i, j) -= y * a(m, j);
                    for (std::size_t j = 1; j <= n; ++j) a(j, m) += y * a(j, i);
                }
            }
        }
    }
    for (std::size_t i = 3; i <= n; ++i)
        for (std::size_t j = 1; j + 1 < i; ++j) a(i, j) = 0.0;
}

double sign_like(double a, double b) { return b >= 0.0 ? std::fabs(a) : -std::fabs(a); }

std::vector<std::complex<double>> hessenberg_qr(Work& a)
{
    const std::size_t n = a.n;
    std::vector<double> wr(n + 1, 0.0), wi(n + 1, 0.0);
    double anorm = 0.0;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = std::max<std::size_t>(i - 1, 1); j <= n; ++j) anorm += std::fabs(a(i, j));

    const std::size_t budget = std::max<std::size_t>(30, 100 * n * n);
    std::size_t total = 0;
    long nn = static_cast<long>(n);
    double t = 0.0;
    while (nn >= 1) {
        int its = 0;
        long l = 0;
        do {
            for (l = nn; l >= 2; --l) {
                double s = std::fabs(a(l - 1, l - 1)) + std::fabs(a(l, l));
                if (s == 0.0) s = anorm;
                if (std::fabs(a(l, l - 1)) + s == s) {
                    a(l, l - 1) = 0.0;
                    break;
                }
            }
            double x = a(nn, nn);
            if (l == nn) {
                wr[nn] = x + t;
                wi[nn--] = 0.0;
            } else {
                double y = a(nn - 1, nn - 1);
                double w = a(nn, nn - 1) * a(nn - 1, nn);
                if (l == nn - 1) {
                    const double p = 0.5 * (y - x);
                    const double q = p * p + w;
                    double z = std::sqrt(std::fabs(q));
                    x += t;
                    if (q >= 0.0) {
                        z = p + sign_like(z, p);
                        wr[nn - 1] = wr[nn] = x + z;
                        if (z != 0.0) wr[nn] = x - w / z;
                        wi[nn - 1] = wi[nn] = 0.0;
                    } else {
                        wr[nn - 1] = wr[nn] = x + p;
                        wi[nn - 1] = -(wi[nn] = z);
                    }
                    nn -= 2;
                } else {
                    if (++total > budget) throw NonConvergence("QR iteration exceeded its budget");
                    if (its > 0 && its % 10 == 0) {
                        // exceptional shift
                        t += x;
                        for (long i = 1; i <= nn; ++i) a(i, i) -= x;
                        const double s = std::fabs(a(nn, nn - 1)) + std::fabs(a(nn - 1, nn - 2));
                        y = x = 0.75 * s;
                        w = -0.4375 * s * s;
                    }
                    ++its;
                    long m = nn - 2;
                    double p = 0.0, q = 0.0, r = 0.0, z = 0.0;
                    for (; m >= l; --m) {
                        z = a(m, m);
                        r = x - z;
                        double s = y - z;
                        p = (r * s - w) / a(m + 1, m) + a(m, m + 1);
                        q = a(m + 1, m + 1) - z - r - s;
                        r = a(m + 2, m + 1);
                        s = std::fabs(p) + std::fabs(q) + std::fabs(r);
                        p /= s;
                        q /= s;
                        r /= s;
                        if (m == l) break;
                        const double u = std::fabs(a(m, m - 1)) * (std::fabs(q) + std::fabs(r));
                        const double v = std::fabs(p) * (std::fabs(a(m - 1, m - 1)) + std::fabs(z) + std::fabs(a(m + 1, m + 1)));
                        if (u + v == v) break;
                    }
                    for (long i = m + 2; i <= nn; ++i) {
                        a(i, i - 2) = 0.0;
                        if (i != m + 2) a(i, i - 3) = 0.0;
                    }
                    for (long k = m; k <= nn - 1; ++k) {
                        if (k != m) {
                            p = a(k, k - 1);
                            q = a(k + 1, k - 1);
                            r = 0.0;
                            if (k != nn - 1) r = a(k + 2, k - 1);
                            if ((x = std::fabs(p) + std::fabs(q) + std::fabs(r)) != 0.0) {
                                p /= x;
                                q /= x;
                                r /= x;
                            }
                        }
                        const double s = sign_like(std::sqrt(p * p + q * q + r * r), p);
                        if (s != 0.0) {
                            if (k == m) {
                                if (l != m) a(k, k - 1) = -a(k, k - 1);
                            } else {
                                a(k, k - 1) = -s * x;
                            }
                            p += s;
                            x = p / s;
                            y = q / s;
                            z = r / s;
                            q /= p;
                            r /= p;
                            for (long j = k; j <= nn; ++j) {
                                p = a(k, j) + q * a(k + 1, j);
                                if (k != nn - 1) {
                                    p += r * a(k + 2, j);
                                    a(k + 2, j) -= p * z;
                                }
                                a(k + 1, j) -= p * y;
                                a(k, j) -= p * x;
                            }
                            const long mmin = nn < k + 3 ? nn : k + 3;
                            for (long i = l; i <= mmin; ++i) {
                                p = x * a(i, k) + y * a(i, k + 1);
                                if (k != nn - 1) {
                                    p += z * a(i, k + 2);
                                    a(i, k + 2) -= p * r;
                                }
                                a(i, k + 1) -= p * q;
                                a(i, k) -= p;
                            }
                        }
                    }
                }
            }
        } while (l < nn - 1);
    }
    std::vector<std::complex<double>> out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) out.emplace_back(wr[i], wi[i]);
    return out;
}

} // namespace

std::vector<std::complex<double>> eigenvalues(const Matrix<double>& m)
{
    const std::size_t n = m.size();
    for (double x : m.data())
        if (!std::isfinite(x)) throw InputError("matrix has non-finite entries");
    if (n == 0) return {};
    Work a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i + 1, j + 1) = m(i, j);
    balance(a);
    to_hessenberg(a);
    auto eigs = hessenberg_qr(a);
    std::sort(eigs.begin(), eigs.end(), [](const auto& x, const auto& y) {
        if (x.real() != y.real()) return x.real() > y.real();
        return x.imag() > y.imag();
    });
    return eigs;
}

std::vector<double> real_eigenvector(const Matrix<double>& a, double lambda)
{
    const std::size_t n = a.size();
    const double scale = std::max(1.0, frobenius_norm(a));
    const double eps = std::numeric_limits<double>::epsilon();
    // Shift slightly off the eigenvalue so the factorization stays finite.
    const double shift = lambda + 1e-10 * scale;

    Matrix<double> lu = a;
    for (std::size_t i = 0; i < n; ++i) lu(i, i) -= shift;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::fabs(lu(i, k)) > std::fabs(lu(piv, k))) piv = i;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
            std::swap(perm[k], perm[piv]);
        }
        if (std::fabs(lu(k, k)) < eps * scale) lu(k, k) = eps * scale;
        for (std::size_t i = k + 1; i < n; ++i) {
            lu(i, k) /= lu(k, k);
            for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= lu(i, k) * lu(k, j);
        }
    }
    auto solve = [&](const std::vector<double>& b) {
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            double s = b[perm[i]];
            for (std::size_t j = 0; j < i; ++j) s -= lu(i, j) * y[j];
            y[i] = s;
        }
        for (std::size_t i = n; i-- > 0;) {
            double s = y[i];
            for (std::size_t j = i + 1; j < n; ++j) s -= lu(i, j) * y[j];
            y[i] = s / lu(i, i);
        }
        return y;
    };
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 + 0.01 * static_cast<double>(i);
    for (int it = 0; it < 6; ++it) {
        x = solve(x);
        double norm = 0.0;
        for (double xi : x) norm += xi * xi;
        norm = std::sqrt(norm);
        if (!(norm > 0.0) || !std::isfinite(norm)) throw NonConvergence("inverse iteration broke down");
        for (double& xi : x) xi /= norm;
    }
    return x;
}

double spectral_abscissa(const std::vector<std::complex<double>>& eigs)
{
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& z : eigs) m = std::max(m, z.real());
    return m;
}

namespace {

std::complex<double> horner(const std::vector<double>& c, std::complex<double> z, std::complex<double>* deriv)
{
    std::complex<double> p = 0.0, dp = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
    }
    if (deriv) *deriv = dp;
    return p;
}

double magnitude_bound(const std::vector<double>& c, double r)
{
    double s = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) s = s * r + std::fabs(c[i]);
    return s;
}

} // namespace

template <class T>
std::vector<std::complex<double>> all_roots(const UniPoly<T>& p, const Tolerance& tol)
{
    validate(tol);
    const std::size_t d = p.degree_or_throw();
    if (d == 0) return {};
    std::vector<double> c;
    c.reserve(d + 1);
    const double lead = to_double(p.leading());
    for (const auto& x : p.coeffs()) c.push_back(to_double(x) / lead);

    Matrix<double> comp(d);
    for (std::size_t i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (std::size_t i = 0; i < d; ++i) comp(i, d - 1) = -c[i];
    auto roots = eigenvalues(comp);

    constexpr double residual_rel = 1e-8;
    for (auto& r : roots) {
        for (int it = 0; it < 3; ++it) {
            std::complex<double> dp;
            const auto val = horner(c, r, &dp);
            if (dp == 0.0) break;
            const auto next = r - val / dp;
            if (std::abs(horner(c, next, nullptr)) < std::abs(val)) r = next;
            else break;
        }
        // keep conjugate symmetry for real input
        if (std::fabs(r.imag()) <= 1e-14 * std::max(1.0, std::abs(r))) r = {r.real(), 0.0};
        const double bound = residual_rel * magnitude_bound(c, std::abs(r)) + tol.abs;
        if (std::abs(horner(c, r, nullptr)) > bound) throw NonConvergence("polynomial root residual exceeds bound");
    }
    std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
        if (x.real() != y.real()) return x.real() > y.real();
        return x.imag() > y.imag();
    });
    return roots;
}

template std::vector<std::complex<double>> all_roots(const UniPoly<double>&, const Tolerance&);
template std::vector<std::complex<double>> all_roots(const UniPoly<Rational>&, const Tolerance&);

} // namespace lorentz
