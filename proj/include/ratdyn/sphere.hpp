#ifndef RATDYN_SPHERE_HPP
#define RATDYN_SPHERE_HPP

#include <optional>
#include <vector>

#include "ratdyn/numeric.hpp"
#include "ratdyn/poly.hpp"

namespace ratdyn {

// Distances and derivative moduli are chordal by default. Plane switches to
// the euclidean metric of the z-chart for cross-checking textbook values;
// it degenerates at infinity and is only meant for bounded orbits.
enum class Metric { Spherical, Plane };

// Point of the Riemann sphere as a homogeneous pair (z : w),
// kept normalized so that max(|z|, |w|) = 1.
struct SpherePoint {
    cplx z{0.0, 0.0};
    cplx w{1.0, 0.0};

    SpherePoint() = default;

    static SpherePoint affine(cplx a);
    static SpherePoint infinity() { return make(cplx(1.0, 0.0), cplx(0.0, 0.0)); }
    // normalizes; errors on (0, 0)
    static SpherePoint make(cplx z, cplx w);

    bool is_infinity() const { return w == cplx(0.0, 0.0); }
    // z/w; +inf components at infinity
    cplx to_affine() const;
    // squared modulus of the affine representative (inf at infinity)
    double affine_norm2() const;

    // 0: coordinate z/w (|.| <= 1 on this half), 1: coordinate w/z
    int chart() const { return std::abs(z) <= std::abs(w) ? 0 : 1; }
    cplx coord(int chart) const { return chart == 0 ? z / w : w / z; }
};

double chordal(const SpherePoint& a, const SpherePoint& b);
double chordal(cplx a, cplx b);

struct MobiusTransform {
    cplx a{1.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{1.0, 0.0};

    cplx determinant() const { return a * d - b * c; }
    MobiusTransform inverse() const;
    SpherePoint apply(const SpherePoint& p) const;

    static MobiusTransform identity() { return {}; }
    static MobiusTransform inversion() { return {cplx(0, 0), cplx(1, 0), cplx(1, 0), cplx(0, 0)}; }
};

struct CriticalPoint {
    SpherePoint point;
    int multiplicity = 1;
};

// Orbit with per-step derivative bookkeeping: logDeriv[j] is the log metric
// derivative at points[j] (-inf when the point is critical), cumLog[k] the
// sum of the first k of those, so cumLog[n] = log |(f^n)'(points[0])|.
struct OrbitRecord {
    std::vector<SpherePoint> points;
    std::vector<double> logDeriv;
    std::vector<double> cumLog;
    std::vector<double> critDistance;

    int length() const { return static_cast<int>(points.size()) - 1; }
};

class RationalMap {
  public:
    // Coefficient lists indexed by power of z; shorter list is padded. The
    // common degree is max of the two degrees and must be >= 2. Coefficients
    // are rescaled so the largest modulus is 1, then |resultant| >= 1e-12 is
    // enforced.
    static RationalMap from_coefficients(Poly num, Poly den);

    int degree() const { return degree_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    cplx resultant() const { return resultant_; }
    bool is_polynomial() const;

    SpherePoint eval(const SpherePoint& p) const;
    cplx eval_affine(cplx z) const;

    // modulus of the derivative w.r.t. the chordal metric; 0 at critical points
    double spherical_derivative(const SpherePoint& p) const;
    // log of the metric derivative; -inf at critical points (and, for the
    // plane metric, wherever the chart degenerates)
    double log_derivative(const SpherePoint& p, Metric metric = Metric::Spherical) const;

    // complex derivative of (chart_out o f o chart_in^-1) at p
    cplx chart_derivative(const SpherePoint& p, int chart_in, int chart_out) const;
    // derivative in the charts the points naturally live in
    cplx chart_derivative(const SpherePoint& p) const { return chart_derivative(p, p.chart(), eval(p).chart()); }

    const std::vector<CriticalPoint>& critical_points() const { return critical_; }
    double crit_distance(const SpherePoint& p) const;
    int nearest_critical_index(const SpherePoint& p) const;

    // the d preimages of target, with multiplicity
    std::vector<SpherePoint> preimages(const SpherePoint& target) const;

    // coefficients of the binary form whose roots are the preimages of target
    void preimage_form(const SpherePoint& target, std::vector<cplx>& out) const;

  private:
    RationalMap() = default;

    int degree_ = 0;
    Poly num_, den_;          // length degree_+1 each
    Poly num_rev_, den_rev_;  // reversed lists (chart at infinity)
    Poly dnum_, dden_, dnum_rev_, dden_rev_;
    std::vector<cplx> wronskian_;      // binary form, degree 2d-2: num'den - num den'
    std::vector<cplx> wronskian_rev_;  // same form in the chart at infinity
    cplx resultant_{0.0, 0.0};
    std::vector<CriticalPoint> critical_;
};

OrbitRecord iterate_orbit(const RationalMap& f, const SpherePoint& start, int n,
                          Metric metric = Metric::Spherical);

RationalMap mobius_conjugate(const RationalMap& f, const MobiusTransform& g);

}  // namespace ratdyn

#endif
