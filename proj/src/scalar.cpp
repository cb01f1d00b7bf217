#include "sgr/scalar.hpp"

#include "sgr/errors.hpp"

namespace sgr {

Scalar Scalar::inverse() const {
    if (is_zero()) throw MathError("DivisionByZero", "inverse of zero scalar");
    mpq_class n = re_ * re_ + im_ * im_;
    return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Scalar::str() const {
    if (is_real()) return re_.get_str();
    if (sgn(re_) == 0) return im_.get_str() + "i";
    std::string s = re_.get_str();
    if (sgn(im_) > 0) s += "+";
    return s + im_.get_str() + "i";
}

}  // namespace sgr
