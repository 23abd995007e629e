#pragma once

#include <cmath>
#include <complex>

namespace altoda {

/// Second-order two-variable jet: value, first and second partials with
/// respect to a pair of chart coordinates. Used wherever the closed-form
/// tensors need exact derivatives (densities, theta series, brackets).
struct Jet2 {
    using C = std::complex<double>;
    C f{}, fx{}, fy{}, fxx{}, fxy{}, fyy{};

    Jet2() = default;
    Jet2(C value) : f(value) {}
    Jet2(double value) : f(value) {}

    static Jet2 var_x(C value) {
        Jet2 j(value);
        j.fx = 1.0;
        return j;
    }
    static Jet2 var_y(C value) {
        Jet2 j(value);
        j.fy = 1.0;
        return j;
    }

    Jet2 operator-() const {
        Jet2 r;
        r.f = -f; r.fx = -fx; r.fy = -fy;
        r.fxx = -fxx; r.fxy = -fxy; r.fyy = -fyy;
        return r;
    }
    friend Jet2 operator+(const Jet2& a, const Jet2& b) {
        Jet2 r;
        r.f = a.f + b.f; r.fx = a.fx + b.fx; r.fy = a.fy + b.fy;
        r.fxx = a.fxx + b.fxx; r.fxy = a.fxy + b.fxy; r.fyy = a.fyy + b.fyy;
        return r;
    }
    friend Jet2 operator-(const Jet2& a, const Jet2& b) { return a + (-b); }
    friend Jet2 operator*(const Jet2& a, const Jet2& b) {
        Jet2 r;
        r.f = a.f * b.f;
        r.fx = a.fx * b.f + a.f * b.fx;
        r.fy = a.fy * b.f + a.f * b.fy;
        r.fxx = a.fxx * b.f + 2.0 * a.fx * b.fx + a.f * b.fxx;
        r.fyy = a.fyy * b.f + 2.0 * a.fy * b.fy + a.f * b.fyy;
        r.fxy = a.fxy * b.f + a.fx * b.fy + a.fy * b.fx + a.f * b.fxy;
        return r;
    }
    friend Jet2 inv(const Jet2& b) {
        Jet2 r;
        const C g = 1.0 / b.f;
        const C g2 = g * g, g3 = g2 * g;
        r.f = g;
        r.fx = -b.fx * g2;
        r.fy = -b.fy * g2;
        r.fxx = -b.fxx * g2 + 2.0 * b.fx * b.fx * g3;
        r.fyy = -b.fyy * g2 + 2.0 * b.fy * b.fy * g3;
        r.fxy = -b.fxy * g2 + 2.0 * b.fx * b.fy * g3;
        return r;
    }
    friend Jet2 operator/(const Jet2& a, const Jet2& b) { return a * inv(b); }

    friend Jet2 exp(const Jet2& a) {
        Jet2 r;
        const C e = std::exp(a.f);
        r.f = e;
        r.fx = a.fx * e;
        r.fy = a.fy * e;
        r.fxx = (a.fxx + a.fx * a.fx) * e;
        r.fyy = (a.fyy + a.fy * a.fy) * e;
        r.fxy = (a.fxy + a.fx * a.fy) * e;
        return r;
    }
    friend Jet2 log(const Jet2& a) {
        Jet2 r;
        const C g = 1.0 / a.f;
        r.f = std::log(a.f);
        r.fx = a.fx * g;
        r.fy = a.fy * g;
        r.fxx = a.fxx * g - a.fx * a.fx * g * g;
        r.fyy = a.fyy * g - a.fy * a.fy * g * g;
        r.fxy = a.fxy * g - a.fx * a.fy * g * g;
        return r;
    }
    friend Jet2 sqrt(const Jet2& a) {
        Jet2 r;
        const C s = std::sqrt(a.f);
        const C h = 0.5 / s;            // d sqrt
        const C q = -0.25 / (s * a.f);  // d^2 sqrt
        r.f = s;
        r.fx = a.fx * h;
        r.fy = a.fy * h;
        r.fxx = a.fxx * h + a.fx * a.fx * q;
        r.fyy = a.fyy * h + a.fy * a.fy * q;
        r.fxy = a.fxy * h + a.fx * a.fy * q;
        return r;
    }
    friend Jet2 pow(const Jet2& a, int n) {
        if (n == 0) return Jet2(1.0);
        Jet2 r = a;
        for (int k = 1; k < n; ++k) r = r * a;
        return r;
    }
};

}  // namespace altoda
