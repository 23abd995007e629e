#pragma once

#include <complex>
#include <cstdint>

#include "altoda/errors.hpp"
#include "altoda/jet.hpp"

namespace altoda::specfun {

using cplx = std::complex<double>;

struct SeriesControl {
    double tol = 1e-13;
    std::int64_t max_terms = 100000;
};

/// (a)_n = a(a+1)...(a+n-1); empty product for n = 0.
cplx pochhammer(cplx a, int n);

/// True when a is within eps of a nonpositive integer on the real axis.
bool is_nonpositive_int(cplx a, double eps = 1e-12);

/// Gauss series sum_k (a)_k (b)_k / ((c)_k k!) x^k. Terminating series are
/// summed exactly; otherwise |x| < 1 is required.
cplx gauss_2f1(cplx a, cplx b, cplx c, cplx x, SeriesControl ctl = {});

/// Terminating 2F1(-n, b; c; x) over any jet-like scalar.
template <class T>
T hyp2f1_poly(int n, cplx b, cplx c, const T& x) {
    T sum(1.0), term(1.0);
    for (int k = 0; k < n; ++k) {
        const cplx coeff = (cplx(-n + k) * (b + cplx(k))) / ((c + cplx(k)) * cplx(k + 1));
        term = term * x * T(coeff);
        sum = sum + term;
    }
    return sum;
}

/// Humbert Psi2 double series summed along anti-diagonals l + m = s.
cplx humbert_psi2(cplx a, cplx b, cplx c, cplx x, cplx y, SeriesControl ctl = {});

/// Li_s for s in {0,1,2,3}; closed forms for s = 0,1, series for s = 2,3.
cplx polylog(int s, cplx x, SeriesControl ctl = {});

/// Complete elliptic integrals in the parameter convention,
/// K(m) = int_0^{pi/2} dtheta / sqrt(1 - m sin^2 theta). AGM iteration.
double elliptic_K(double m);
double elliptic_E(double m);

}  // namespace altoda::specfun
