#ifndef RATDYN_ERGODIC_HPP
#define RATDYN_ERGODIC_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ratdyn/rng.hpp"
#include "ratdyn/sphere.hpp"

namespace ratdyn {

// Non-degenerate homogeneous lift F(x,y) = (P(x,y), Q(x,y)) of a rational map.
struct HomogeneousLift {
    Poly num, den;  // coefficient k multiplies x^k y^(d-k)
    int degree;

    explicit HomogeneousLift(const RationalMap& f)
        : num(f.num()), den(f.den()), degree(f.degree()) {}

    // true homogeneous value (scale matters, unlike projective evaluation)
    void eval(cplx x, cplx y, cplx& px, cplx& qy) const;
};

// d^{-n} log ||F^n(x,y)|| with stepwise renormalization; truncation error O(d^-n).
double green_lift(const HomogeneousLift& lift, cplx x, cplx y, int n_max);

// Escape-rate Green function lim d^{-n} log+ |p^n(z)| for a polynomial map,
// truncated at n_max. Independent of the lift machinery; used as an oracle.
double polynomial_green_escape(const RationalMap& p, cplx z, int n_max);

struct EquilibriumSample {
    std::vector<SpherePoint> points;
    int burnInDepth = 0;
    std::uint64_t seed = 0;
};

struct LyapunovEstimate {
    double value = 0.0;    // nats
    double stderr_ = 0.0;  // sample standard deviation / sqrt(count)
    int sampleCount = 0;
};

// Draws `count` points of the maximal-entropy measure, each as the endpoint of
// a depth-fold random pullback of the anchor (uniform among the d preimages
// with multiplicity at every step). The anchor defaults to a seeded random
// non-exceptional point; passing a totally invariant anchor is an error.
EquilibriumSample sample_equilibrium(const RationalMap& f, int depth, int count,
                                     std::uint64_t seed, int threads = 0,
                                     const std::optional<SpherePoint>& anchor = {});

// Monte-Carlo Lyapunov exponent: mean log spherical derivative over an
// equilibrium sample.
LyapunovEstimate lyapunov(const RationalMap& f, int depth, int count, std::uint64_t seed,
                          int threads = 0, const std::optional<SpherePoint>& anchor = {});

// One uniformly random preimage per call; closed forms for degree 2 and for
// unicritical polynomials, companion-matrix roots otherwise.
class PullbackStepper {
  public:
    explicit PullbackStepper(const RationalMap& f);
    SpherePoint step(const SpherePoint& current, Rng& rng) const;

  private:
    enum class Kind { Unicritical, Quadratic, General };
    const RationalMap& f_;
    Kind kind_;
    cplx lead_, tail_;  // unicritical: f(z) = (lead z^d + tail)/den0
    cplx den0_;
};

}  // namespace ratdyn

#endif
