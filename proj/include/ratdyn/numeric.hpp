#ifndef RATDYN_NUMERIC_HPP
#define RATDYN_NUMERIC_HPP

#include <cmath>
#include <complex>
#include <limits>

namespace ratdyn {

using cplx = std::complex<double>;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();

// Complex number stored as mantissa * 2^exp2 so that products along orbits of
// thousands of steps cannot overflow or underflow. Mantissa is kept with
// |m| in roughly [2^-512, 2^512]; renormalization is cheap and rare.
struct ScaledComplex {
    cplx m{0.0, 0.0};
    double exp2{0.0};

    ScaledComplex() = default;
    ScaledComplex(cplx value) : m(value) { normalize(); }
    ScaledComplex(cplx mantissa, double e) : m(mantissa), exp2(e) { normalize(); }

    void normalize() {
        double a = std::abs(m);
        if (a == 0.0 || std::isnan(a)) {
            exp2 = 0.0;
            return;
        }
        if (a > 0x1.0p512 || a < 0x1.0p-512) {
            int e = 0;
            std::frexp(a, &e);
            m = cplx(std::ldexp(m.real(), -e), std::ldexp(m.imag(), -e));
            exp2 += e;
        }
    }

    bool is_zero() const { return m == cplx(0.0, 0.0); }

    // natural log of |value|; -inf for zero
    double log_abs() const {
        if (is_zero()) return kNegInf;
        return std::log(std::abs(m)) + exp2 * 0.6931471805599453;
    }

    cplx to_cplx() const {
        return cplx(std::ldexp(m.real(), static_cast<int>(exp2)),
                    std::ldexp(m.imag(), static_cast<int>(exp2)));
    }

    friend ScaledComplex operator*(const ScaledComplex& a, const ScaledComplex& b) {
        return ScaledComplex(a.m * b.m, a.exp2 + b.exp2);
    }

    friend ScaledComplex operator+(const ScaledComplex& a, const ScaledComplex& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        // align to the larger exponent; the smaller term may flush to zero,
        // which is the correct rounding at ~150 digits of separation
        if (a.exp2 >= b.exp2) {
            double shift = b.exp2 - a.exp2;
            cplx bm = shift < -2000 ? cplx(0, 0) : b.m * std::exp2(shift);
            return ScaledComplex(a.m + bm, a.exp2);
        }
        return b + a;
    }

    friend ScaledComplex operator-(const ScaledComplex& a, const ScaledComplex& b) {
        return a + ScaledComplex(-b.m, b.exp2);
    }
};

// log(sum of exp(x_i)) without overflow; terms may be -inf.
class LogSum {
  public:
    void add(double log_term) {
        if (log_term == kNegInf) return;
        if (log_term > max_) {
            acc_ = (max_ == kNegInf) ? 1.0 : acc_ * std::exp(max_ - log_term) + 1.0;
            max_ = log_term;
        } else {
            acc_ += std::exp(log_term - max_);
        }
    }
    double value() const { return max_ == kNegInf ? kNegInf : max_ + std::log(acc_); }

  private:
    double max_ = kNegInf;
    double acc_ = 0.0;
};

}  // namespace ratdyn

#endif
