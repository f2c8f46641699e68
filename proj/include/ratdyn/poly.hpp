#ifndef RATDYN_POLY_HPP
#define RATDYN_POLY_HPP

#include <vector>

#include "ratdyn/numeric.hpp"

namespace ratdyn {

// Dense complex polynomial, coefficient of z^k at index k.
using Poly = std::vector<cplx>;

int poly_degree(const Poly& p, double tol = 0.0);
void poly_trim(Poly& p, double tol = 1e-14);
cplx poly_eval(const Poly& p, cplx z);
// value and derivative in one Horner pass
void poly_eval_d(const Poly& p, cplx z, cplx& value, cplx& deriv);
Poly poly_derivative(const Poly& p);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, cplx s);

// p(a*z + b), used for Mobius conjugation
Poly poly_compose_linear(const Poly& p, cplx a, cplx b);

// All complex roots of p (degree = poly_degree(p)), companion-matrix
// eigenvalues followed by a few Newton steps each.
std::vector<cplx> poly_roots(const Poly& p);

// Roots on the Riemann sphere of the degree-`deg` binary form with
// coefficients c[k] for x^k y^(deg-k). Returned as (z, w) homogeneous pairs;
// drops at infinity (vanishing leading coefficients) yield (1, 0) entries.
struct FormRoot {
    cplx z, w;
};
std::vector<FormRoot> binary_form_roots(const std::vector<cplx>& coeff, int deg);

// Resultant of two binary forms of common degree d (Sylvester determinant of
// the padded coefficient lists). Zero exactly when they share a projective root.
cplx sylvester_resultant(const std::vector<cplx>& a, const std::vector<cplx>& b, int d);

}  // namespace ratdyn

#endif
