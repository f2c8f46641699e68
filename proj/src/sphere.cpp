#include "ratdyn/sphere.hpp"

#include <algorithm>
#include <cmath>

#include "ratdyn/errors.hpp"

namespace ratdyn {

SpherePoint SpherePoint::affine(cplx a) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) return infinity();
    return make(a, cplx(1.0, 0.0));
}

SpherePoint SpherePoint::make(cplx z, cplx w) {
    double s = std::max(std::abs(z), std::abs(w));
    if (s == 0.0 || std::isnan(s)) fail(ErrorCode::Validation, "invalid homogeneous pair");
    SpherePoint p;
    p.z = z / s;
    p.w = w / s;
    return p;
}

cplx SpherePoint::to_affine() const {
    if (is_infinity()) return {kPosInf, 0.0};
    return z / w;
}

double SpherePoint::affine_norm2() const {
    if (is_infinity()) return kPosInf;
    return std::norm(z) / std::norm(w);
}

double chordal(const SpherePoint& a, const SpherePoint& b) {
    double cross = std::abs(a.z * b.w - b.z * a.w);
    double na = std::sqrt(std::norm(a.z) + std::norm(a.w));
    double nb = std::sqrt(std::norm(b.z) + std::norm(b.w));
    return 2.0 * cross / (na * nb);
}

double chordal(cplx a, cplx b) {
    return 2.0 * std::abs(a - b) / std::sqrt((1.0 + std::norm(a)) * (1.0 + std::norm(b)));
}

MobiusTransform MobiusTransform::inverse() const {
    cplx det = determinant();
    if (std::abs(det) == 0.0) fail(ErrorCode::Validation, "singular Mobius transform");
    return {d / det, -b / det, -c / det, a / det};
}

SpherePoint MobiusTransform::apply(const SpherePoint& p) const {
    return SpherePoint::make(a * p.z + b * p.w, c * p.z + d * p.w);
}

namespace {

Poly padded(Poly p, std::size_t len) {
    p.resize(len, cplx(0.0, 0.0));
    return p;
}

Poly reversed(const Poly& p) { return Poly(p.rbegin(), p.rend()); }

}  // namespace

RationalMap RationalMap::from_coefficients(Poly num, Poly den) {
    if (num.empty() || den.empty()) fail(ErrorCode::BadDegree, "empty coefficient list");
    int d = static_cast<int>(std::max(num.size(), den.size())) - 1;
    if (d < 2) fail(ErrorCode::BadDegree, "rational map must have degree >= 2");

    RationalMap f;
    f.degree_ = d;
    f.num_ = padded(std::move(num), static_cast<std::size_t>(d + 1));
    f.den_ = padded(std::move(den), static_cast<std::size_t>(d + 1));

    double scale = 0.0;
    for (const auto& c : f.num_) scale = std::max(scale, std::abs(c));
    for (const auto& c : f.den_) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) fail(ErrorCode::DegenerateMap, "all coefficients vanish");
    for (auto& c : f.num_) c /= scale;
    for (auto& c : f.den_) c /= scale;

    f.resultant_ = sylvester_resultant(f.num_, f.den_, d);
    if (std::abs(f.resultant_) < 1e-12)
        fail(ErrorCode::DegenerateMap, "resultant below tolerance, map is degenerate");

    f.num_rev_ = reversed(f.num_);
    f.den_rev_ = reversed(f.den_);
    f.dnum_ = padded(poly_derivative(f.num_), static_cast<std::size_t>(d));
    f.dden_ = padded(poly_derivative(f.den_), static_cast<std::size_t>(d));
    f.dnum_rev_ = padded(poly_derivative(f.num_rev_), static_cast<std::size_t>(d));
    f.dden_rev_ = padded(poly_derivative(f.den_rev_), static_cast<std::size_t>(d));

    // num' den - num den' has degree <= 2d-2; stored as a binary form of
    // exactly that degree so roots at infinity are counted correctly
    Poly w = poly_sub(poly_mul(f.dnum_, f.den_), poly_mul(f.num_, f.dden_));
    f.wronskian_ = padded(std::move(w), static_cast<std::size_t>(2 * d - 1));
    f.wronskian_rev_ = poly_scale(reversed(f.wronskian_), cplx(-1.0, 0.0));

    auto roots = binary_form_roots(f.wronskian_, 2 * d - 2);
    for (const auto& r : roots) {
        SpherePoint p = SpherePoint::make(r.z, r.w);
        bool merged = false;
        for (auto& existing : f.critical_) {
            if (chordal(existing.point, p) < 1e-8) {
                existing.multiplicity += 1;
                merged = true;
                break;
            }
        }
        if (!merged) f.critical_.push_back({p, 1});
    }
    return f;
}

bool RationalMap::is_polynomial() const {
    return poly_degree(den_, 1e-14) == 0;
}

SpherePoint RationalMap::eval(const SpherePoint& p) const {
    if (p.chart() == 0) {
        cplx t = p.z / p.w;
        return SpherePoint::make(poly_eval(num_, t), poly_eval(den_, t));
    }
    cplx s = p.w / p.z;
    return SpherePoint::make(poly_eval(num_rev_, s), poly_eval(den_rev_, s));
}

cplx RationalMap::eval_affine(cplx z) const { return eval(SpherePoint::affine(z)).to_affine(); }

double RationalMap::spherical_derivative(const SpherePoint& p) const {
    int c = p.chart();
    cplx t = p.coord(c);
    const Poly& a = (c == 0) ? num_ : num_rev_;
    const Poly& b = (c == 0) ? den_ : den_rev_;
    const Poly& w = (c == 0) ? wronskian_ : wronskian_rev_;
    double wv = std::abs(poly_eval(w, t));
    double denom = std::norm(poly_eval(a, t)) + std::norm(poly_eval(b, t));
    return wv * (1.0 + std::norm(t)) / denom;
}

double RationalMap::log_derivative(const SpherePoint& p, Metric metric) const {
    double sph = spherical_derivative(p);
    double ls = (sph == 0.0) ? kNegInf : std::log(sph);
    if (metric == Metric::Spherical) return ls;
    // |f'(z)| = f#(z) * (1+|f(z)|^2) / (1+|z|^2); meaningless at infinity
    double zn = p.affine_norm2();
    double fn = eval(p).affine_norm2();
    if (std::isinf(zn) || std::isinf(fn)) return std::numeric_limits<double>::quiet_NaN();
    return ls + std::log1p(fn) - std::log1p(zn);
}

cplx RationalMap::chart_derivative(const SpherePoint& p, int chart_in, int chart_out) const {
    cplx t = p.coord(chart_in);
    const Poly& a = (chart_in == 0) ? num_ : num_rev_;
    const Poly& b = (chart_in == 0) ? den_ : den_rev_;
    const Poly& w = (chart_in == 0) ? wronskian_ : wronskian_rev_;
    cplx wv = poly_eval(w, t);
    if (chart_out == 0) {
        cplx q = poly_eval(b, t);
        return wv / (q * q);
    }
    cplx pv = poly_eval(a, t);
    return -wv / (pv * pv);
}

double RationalMap::crit_distance(const SpherePoint& p) const {
    double best = kPosInf;
    for (const auto& c : critical_) best = std::min(best, chordal(c.point, p));
    return best;
}

int RationalMap::nearest_critical_index(const SpherePoint& p) const {
    int best = 0;
    double bd = kPosInf;
    for (std::size_t i = 0; i < critical_.size(); ++i) {
        double d = chordal(critical_[i].point, p);
        if (d < bd) {
            bd = d;
            best = static_cast<int>(i);
        }
    }
    return best;
}

void RationalMap::preimage_form(const SpherePoint& target, std::vector<cplx>& out) const {
    out.resize(static_cast<std::size_t>(degree_ + 1));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = num_[k] * target.w - den_[k] * target.z;
}

std::vector<SpherePoint> RationalMap::preimages(const SpherePoint& target) const {
    std::vector<cplx> form;
    preimage_form(target, form);
    std::vector<SpherePoint> pts;
    pts.reserve(static_cast<std::size_t>(degree_));
    for (const auto& r : binary_form_roots(form, degree_)) pts.push_back(SpherePoint::make(r.z, r.w));
    return pts;
}

OrbitRecord iterate_orbit(const RationalMap& f, const SpherePoint& start, int n, Metric metric) {
    OrbitRecord rec;
    rec.points.reserve(static_cast<std::size_t>(n) + 1);
    rec.logDeriv.reserve(static_cast<std::size_t>(n) + 1);
    rec.cumLog.reserve(static_cast<std::size_t>(n) + 1);
    rec.critDistance.reserve(static_cast<std::size_t>(n) + 1);

    SpherePoint p = start;
    rec.points.push_back(p);
    rec.cumLog.push_back(0.0);
    for (int j = 0; j <= n; ++j) {
        rec.logDeriv.push_back(f.log_derivative(p, metric));
        rec.critDistance.push_back(f.crit_distance(p));
        if (j == n) break;
        p = f.eval(p);
        rec.points.push_back(p);
        rec.cumLog.push_back(rec.cumLog.back() + rec.logDeriv.back());
    }
    return rec;
}

RationalMap mobius_conjugate(const RationalMap& f, const MobiusTransform& g) {
    MobiusTransform gi = g.inverse();
    int d = f.degree();

    // binary forms multiply like univariate coefficient lists
    Poly lx = {gi.b, gi.a};  // x-component of g^-1 as a linear form
    Poly ly = {gi.d, gi.c};
    std::vector<Poly> pow_x(static_cast<std::size_t>(d + 1)), pow_y(static_cast<std::size_t>(d + 1));
    pow_x[0] = pow_y[0] = {cplx(1.0, 0.0)};
    for (int k = 1; k <= d; ++k) {
        pow_x[static_cast<std::size_t>(k)] = poly_mul(pow_x[static_cast<std::size_t>(k - 1)], lx);
        pow_y[static_cast<std::size_t>(k)] = poly_mul(pow_y[static_cast<std::size_t>(k - 1)], ly);
    }

    Poly pc, qc;
    for (int k = 0; k <= d; ++k) {
        Poly term = poly_mul(pow_x[static_cast<std::size_t>(k)], pow_y[static_cast<std::size_t>(d - k)]);
        pc = poly_add(pc, poly_scale(term, f.num()[static_cast<std::size_t>(k)]));
        qc = poly_add(qc, poly_scale(term, f.den()[static_cast<std::size_t>(k)]));
    }

    Poly out_num = poly_add(poly_scale(pc, g.a), poly_scale(qc, g.b));
    Poly out_den = poly_add(poly_scale(pc, g.c), poly_scale(qc, g.d));
    return RationalMap::from_coefficients(std::move(out_num), std::move(out_den));
}

}  // namespace ratdyn
