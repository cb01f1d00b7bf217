#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace sgr {

// Gaussian rational a + b*i with exact GMP rationals. Pure rationals are the
// im == 0 case; there is no separate type for them.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar frac(long num, long den) { return Scalar(mpq_class(num, den)); }
    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    Scalar inverse() const;

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    // total order used only for canonical container ordering
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    std::string str() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

}  // namespace sgr
