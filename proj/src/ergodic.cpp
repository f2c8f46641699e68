#include "ratdyn/ergodic.hpp"

#include <algorithm>
#include <cmath>

#include "ratdyn/errors.hpp"
#include "ratdyn/parallel.hpp"

namespace ratdyn {

void HomogeneousLift::eval(cplx x, cplx y, cplx& px, cplx& qy) const {
    // evaluate in the chart where the Horner argument has modulus <= 1
    if (std::abs(x) <= std::abs(y)) {
        cplx t = x / y;
        cplx yd = std::pow(y, degree);
        px = yd * poly_eval(num, t);
        qy = yd * poly_eval(den, t);
    } else {
        cplx s = y / x;
        cplx xd = std::pow(x, degree);
        cplx acc_p(0.0, 0.0), acc_q(0.0, 0.0);
        for (std::size_t k = 0; k <= static_cast<std::size_t>(degree); ++k) {
            acc_p = acc_p * s + num[num.size() - 1 - k];
            acc_q = acc_q * s + den[den.size() - 1 - k];
        }
        px = xd * acc_p;
        qy = xd * acc_q;
    }
}

double green_lift(const HomogeneousLift& lift, cplx x, cplx y, int n_max) {
    if (x == cplx(0.0, 0.0) && y == cplx(0.0, 0.0))
        fail(ErrorCode::Validation, "green_lift requires a nonzero point");
    if (n_max < 1) fail(ErrorCode::Validation, "green_lift requires n_max >= 1");

    double norm = std::sqrt(std::norm(x) + std::norm(y));
    double acc = std::log(norm);
    x /= norm;
    y /= norm;
    double dinv = 1.0 / lift.degree;
    double weight = 1.0;
    for (int k = 0; k < n_max; ++k) {
        cplx px, qy;
        lift.eval(x, y, px, qy);
        double r = std::sqrt(std::norm(px) + std::norm(qy));
        weight *= dinv;
        acc += weight * std::log(r);
        x = px / r;
        y = qy / r;
    }
    return acc;
}

double polynomial_green_escape(const RationalMap& p, cplx z, int n_max) {
    if (!p.is_polynomial())
        fail(ErrorCode::Validation, "polynomial_green_escape requires a polynomial map");
    if (n_max < 1) fail(ErrorCode::Validation, "n_max >= 1 required");

    int d = p.degree();
    cplx den0 = p.den()[0];
    cplx lead = p.num()[static_cast<std::size_t>(d)] / den0;
    double log_lead = std::log(std::abs(lead));

    int n = 0;
    while (n < n_max && std::abs(z) <= 1e8) {
        z = poly_eval(p.num(), z) / den0;
        ++n;
    }
    if (n == n_max) {
        double a = std::abs(z);
        return a <= 1.0 ? 0.0 : std::log(a) * std::pow(1.0 / d, n_max);
    }
    // escaped: continue in log scale, lower-order terms are below double precision
    double L = std::log(std::abs(z));
    for (; n < n_max; ++n) L = d * L + log_lead;
    return std::max(0.0, L) * std::pow(1.0 / d, n_max);
}

PullbackStepper::PullbackStepper(const RationalMap& f) : f_(f) {
    int d = f.degree();
    den0_ = f.den()[0];
    bool unicritical = f.is_polynomial();
    if (unicritical) {
        for (int k = 1; k < d; ++k)
            if (std::abs(f.num()[static_cast<std::size_t>(k)]) > 1e-14) unicritical = false;
    }
    if (unicritical) {
        kind_ = Kind::Unicritical;
        lead_ = f.num()[static_cast<std::size_t>(d)] / den0_;
        tail_ = f.num()[0] / den0_;
    } else if (d == 2) {
        kind_ = Kind::Quadratic;
    } else {
        kind_ = Kind::General;
    }
}

SpherePoint PullbackStepper::step(const SpherePoint& current, Rng& rng) const {
    int d = f_.degree();
    switch (kind_) {
        case Kind::Unicritical: {
            // z^d = (y - tail)/lead
            if (current.is_infinity()) return current;
            cplx rhs = (current.to_affine() - tail_) / lead_;
            cplx root;
            if (rhs == cplx(0.0, 0.0)) {
                root = rhs;
            } else {
                double theta = std::arg(rhs) / d;
                double mag = std::exp(std::log(std::abs(rhs)) / d);
                double rot = 6.283185307179586 * static_cast<double>(rng.next_below(static_cast<std::uint64_t>(d))) / d;
                root = std::polar(mag, theta + rot);
            }
            return SpherePoint::affine(root);
        }
        case Kind::Quadratic: {
            // projective roots of c2 x^2 + c1 xy + c0 y^2
            cplx c2 = f_.num()[2] * current.w - f_.den()[2] * current.z;
            cplx c1 = f_.num()[1] * current.w - f_.den()[1] * current.z;
            cplx c0 = f_.num()[0] * current.w - f_.den()[0] * current.z;
            cplx s = std::sqrt(c1 * c1 - 4.0 * c2 * c0);
            cplx q = (std::real(std::conj(c1) * s) >= 0.0) ? -0.5 * (c1 + s) : -0.5 * (c1 - s);
            bool first = rng.next_below(2) == 0;
            if (std::abs(q) > 0.0)
                return first ? SpherePoint::make(q, c2) : SpherePoint::make(c0, q);
            // q == 0 forces c1 = 0 and c0*c2 = 0
            if (std::abs(c2) >= std::abs(c0)) return SpherePoint::make(cplx(0.0, 0.0), cplx(1.0, 0.0));
            return SpherePoint::infinity();
        }
        case Kind::General:
        default: {
            auto pts = f_.preimages(current);
            return pts[rng.next_below(pts.size())];
        }
    }
}

namespace {

bool is_exceptional_anchor(const RationalMap& f, const SpherePoint& a) {
    for (const auto& pre : f.preimages(a))
        if (chordal(pre, a) > 1e-9) return false;
    return true;
}

SpherePoint default_anchor(const RationalMap& f, std::uint64_t seed) {
    Rng rng = Rng::substream(seed, 0x616e63686fULL);
    for (int attempt = 0; attempt < 64; ++attempt) {
        SpherePoint a = SpherePoint::affine(2.0 * rng.next_in_square());
        if (f.crit_distance(a) < 1e-3) continue;
        if (!is_exceptional_anchor(f, a)) return a;
    }
    fail(ErrorCode::ExceptionalAnchor, "could not find a non-exceptional anchor");
}

}  // namespace

EquilibriumSample sample_equilibrium(const RationalMap& f, int depth, int count,
                                     std::uint64_t seed, int threads,
                                     const std::optional<SpherePoint>& anchor) {
    if (depth < 20) fail(ErrorCode::Validation, "pullback depth must be >= 20");
    if (count < 1) fail(ErrorCode::Validation, "sample count must be >= 1");

    SpherePoint a;
    if (anchor) {
        a = *anchor;
        if (is_exceptional_anchor(f, a))
            fail(ErrorCode::ExceptionalAnchor, "anchor is a totally invariant point");
    } else {
        a = default_anchor(f, seed);
    }

    EquilibriumSample out;
    out.burnInDepth = depth;
    out.seed = seed;
    out.points.resize(static_cast<std::size_t>(count));

    PullbackStepper stepper(f);
    parallel_for(static_cast<std::size_t>(count), threads, [&](std::size_t i) {
        Rng rng = Rng::substream(seed, i);
        SpherePoint p = a;
        for (int k = 0; k < depth; ++k) p = stepper.step(p, rng);
        out.points[i] = p;
    });
    return out;
}

LyapunovEstimate lyapunov(const RationalMap& f, int depth, int count, std::uint64_t seed,
                          int threads, const std::optional<SpherePoint>& anchor) {
    EquilibriumSample sample = sample_equilibrium(f, depth, count, seed, threads, anchor);
    std::vector<double> vals(sample.points.size());
    parallel_for(sample.points.size(), threads,
                 [&](std::size_t i) { vals[i] = f.log_derivative(sample.points[i]); });

    double mean = 0.0;
    for (double v : vals) mean += v;
    mean /= static_cast<double>(vals.size());
    double var = 0.0;
    for (double v : vals) var += (v - mean) * (v - mean);
    var /= static_cast<double>(vals.size());

    LyapunovEstimate est;
    est.value = mean;
    est.stderr_ = std::sqrt(var / static_cast<double>(vals.size()));
    est.sampleCount = count;
    return est;
}

}  // namespace ratdyn
