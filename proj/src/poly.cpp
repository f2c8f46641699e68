#include "ratdyn/poly.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "ratdyn/errors.hpp"

namespace ratdyn {

int poly_degree(const Poly& p, double tol) {
    for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k)
        if (std::abs(p[static_cast<std::size_t>(k)]) > tol) return k;
    return -1;
}

void poly_trim(Poly& p, double tol) {
    int d = poly_degree(p, tol);
    p.resize(static_cast<std::size_t>(d + 1));
}

cplx poly_eval(const Poly& p, cplx z) {
    cplx acc(0.0, 0.0);
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * z + p[k];
    return acc;
}

void poly_eval_d(const Poly& p, cplx z, cplx& value, cplx& deriv) {
    value = cplx(0.0, 0.0);
    deriv = cplx(0.0, 0.0);
    for (std::size_t k = p.size(); k-- > 0;) {
        deriv = deriv * z + value;
        value = value * z + p[k];
    }
}

Poly poly_derivative(const Poly& p) {
    Poly d;
    if (p.size() <= 1) return d;
    d.resize(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = static_cast<double>(k) * p[k];
    return d;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly c(std::max(a.size(), b.size()), cplx(0.0, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return c;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly c(std::max(a.size(), b.size()), cplx(0.0, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    return c;
}

Poly poly_scale(const Poly& a, cplx s) {
    Poly c(a);
    for (auto& v : c) v *= s;
    return c;
}

Poly poly_compose_linear(const Poly& p, cplx a, cplx b) {
    // Horner in the linear argument: result = (...(p_n (az+b) + p_{n-1})(az+b) + ...)
    Poly acc;
    for (std::size_t k = p.size(); k-- > 0;) {
        // acc = acc * (a z + b) + p[k]
        Poly next(acc.size() + 1, cplx(0.0, 0.0));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] += acc[i] * a;
            next[i] += acc[i] * b;
        }
        if (next.empty()) next.resize(1, cplx(0.0, 0.0));
        next[0] += p[k];
        acc = std::move(next);
    }
    return acc;
}

namespace {

void newton_polish(const Poly& p, cplx& root) {
    for (int it = 0; it < 8; ++it) {
        cplx v, d;
        poly_eval_d(p, root, v, d);
        if (std::abs(d) == 0.0) return;
        cplx step = v / d;
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return;
        if (std::abs(step) > 0.5 * (1.0 + std::abs(root))) return;  // diverging, keep eigenvalue
        root -= step;
        if (std::abs(step) < 1e-14 * (1.0 + std::abs(root))) return;
    }
}

std::vector<cplx> quadratic_roots(cplx a, cplx b, cplx c) {
    cplx disc = std::sqrt(b * b - 4.0 * a * c);
    // pick the sign that avoids cancellation in -b -+ disc
    cplx q = (std::real(std::conj(b) * disc) >= 0.0) ? -0.5 * (b + disc) : -0.5 * (b - disc);
    std::vector<cplx> r;
    if (std::abs(q) > 0.0) {
        r.push_back(q / a);
        r.push_back(c / q);
    } else {
        r.push_back(cplx(0.0, 0.0));
        r.push_back(-b / a);
    }
    return r;
}

}  // namespace

std::vector<cplx> poly_roots(const Poly& p) {
    int deg = poly_degree(p);
    if (deg <= 0) return {};
    if (deg == 1) return {-p[0] / p[1]};
    if (deg == 2) {
        auto r = quadratic_roots(p[2], p[1], p[0]);
        for (auto& z : r) newton_polish(p, z);
        return r;
    }
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    cplx lead = p[static_cast<std::size_t>(deg)];
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -p[static_cast<std::size_t>(i)] / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success)
        fail(ErrorCode::RootFindingFailure, "companion eigenvalue iteration did not converge");
    std::vector<cplx> roots(static_cast<std::size_t>(deg));
    for (int i = 0; i < deg; ++i) {
        roots[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
        newton_polish(p, roots[static_cast<std::size_t>(i)]);
    }
    return roots;
}

std::vector<FormRoot> binary_form_roots(const std::vector<cplx>& coeff, int deg) {
    if (static_cast<int>(coeff.size()) != deg + 1)
        fail(ErrorCode::BadDegree, "binary form coefficient count does not match degree");
    // scale-invariant threshold for "vanishing" leading coefficients
    double scale = 0.0;
    for (const auto& c : coeff) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) fail(ErrorCode::RootFindingFailure, "zero binary form");
    double tol = scale * 1e-13;

    Poly affine(coeff);
    int affine_deg = poly_degree(affine, tol);
    affine.resize(static_cast<std::size_t>(std::max(affine_deg, 0)) + 1);

    std::vector<FormRoot> out;
    out.reserve(static_cast<std::size_t>(deg));
    for (int k = 0; k < deg - affine_deg; ++k) out.push_back({cplx(1.0, 0.0), cplx(0.0, 0.0)});
    if (affine_deg >= 1) {
        for (cplx z : poly_roots(affine)) {
            if (std::abs(z) <= 1.0) {
                out.push_back({z, cplx(1.0, 0.0)});
            } else {
                // refine in the chart at infinity where this root is well conditioned
                Poly rev(coeff.rbegin(), coeff.rend());
                cplx w = 1.0 / z;
                newton_polish(rev, w);
                out.push_back({cplx(1.0, 0.0), w});
            }
        }
    }
    return out;
}

cplx sylvester_resultant(const std::vector<cplx>& a, const std::vector<cplx>& b, int d) {
    int n = 2 * d;
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(n, n);
    for (int row = 0; row < d; ++row)
        for (int k = 0; k <= d; ++k) {
            s(row, row + k) = a[static_cast<std::size_t>(d - k)];
            s(d + row, row + k) = b[static_cast<std::size_t>(d - k)];
        }
    return s.partialPivLu().determinant();
}

}  // namespace ratdyn
