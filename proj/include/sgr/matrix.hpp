#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "sgr/errors.hpp"
#include "sgr/ring.hpp"

namespace sgr {

// Dense matrix of ring elements. The owning ring is passed to every
// operation rather than stored, so matrices stay plain values.
template <class E>
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<E> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c, const E& fill) : rows(r), cols(c), a(r * c, fill) {}

    E& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const E& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

namespace mat {

template <Ring R>
using M = Mat<typename R::Element>;

template <Ring R>
M<R> zeros(const R& r, std::size_t rows, std::size_t cols) {
    return M<R>(rows, cols, r.zero());
}

template <Ring R>
M<R> identity(const R& r, std::size_t n) {
    auto m = zeros(r, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = r.one();
    return m;
}

template <Ring R>
M<R> scalar1(const R&, const typename R::Element& e) {
    return M<R>(1, 1, e);
}

template <Ring R>
M<R> column(const R&, const std::vector<typename R::Element>& v) {
    M<R> m;
    m.rows = v.size();
    m.cols = 1;
    m.a = v;
    return m;
}

template <Ring R>
M<R> row(const R&, const std::vector<typename R::Element>& v) {
    M<R> m;
    m.rows = 1;
    m.cols = v.size();
    m.a = v;
    return m;
}

inline void need_same_shape(std::size_t r1, std::size_t c1, std::size_t r2, std::size_t c2,
                            const char* op) {
    if (r1 != r2 || c1 != c2) {
        std::ostringstream os;
        os << op << ": " << r1 << "x" << c1 << " vs " << r2 << "x" << c2;
        throw InputError("DimensionMismatch", os.str());
    }
}

template <Ring R>
M<R> add(const R& r, const M<R>& x, const M<R>& y) {
    need_same_shape(x.rows, x.cols, y.rows, y.cols, "add");
    M<R> out = x;
    for (std::size_t k = 0; k < out.a.size(); ++k) out.a[k] = r.add(x.a[k], y.a[k]);
    return out;
}

template <Ring R>
M<R> neg(const R& r, const M<R>& x) {
    M<R> out = x;
    for (auto& e : out.a) e = r.neg(e);
    return out;
}

template <Ring R>
M<R> sub(const R& r, const M<R>& x, const M<R>& y) {
    return add(r, x, neg(r, y));
}

template <Ring R>
M<R> scale(const R& r, const Scalar& c, const M<R>& x) {
    M<R> out = x;
    for (auto& e : out.a) e = r.scale(c, e);
    return out;
}

// Left ring multiplication e * X entrywise.
template <Ring R>
M<R> lmul(const R& r, const typename R::Element& e, const M<R>& x) {
    M<R> out = x;
    for (auto& v : out.a) v = r.mul(e, v);
    return out;
}

template <Ring R>
M<R> rmul(const R& r, const M<R>& x, const typename R::Element& e) {
    M<R> out = x;
    for (auto& v : out.a) v = r.mul(v, e);
    return out;
}

template <Ring R>
M<R> mul(const R& r, const M<R>& x, const M<R>& y) {
    if (x.cols != y.rows) {
        std::ostringstream os;
        os << "mul: " << x.rows << "x" << x.cols << " * " << y.rows << "x" << y.cols;
        throw InputError("DimensionMismatch", os.str());
    }
    auto out = zeros(r, x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const auto& xik = x(i, k);
            if (r.is_zero(xik)) continue;
            for (std::size_t j = 0; j < y.cols; ++j) {
                if (r.is_zero(y(k, j))) continue;
                out(i, j) = r.add(out(i, j), r.mul(xik, y(k, j)));
            }
        }
    return out;
}

template <class E>
Mat<E> transpose(const Mat<E>& x) {
    Mat<E> out;
    out.rows = x.cols;
    out.cols = x.rows;
    out.a.reserve(x.a.size());
    for (std::size_t j = 0; j < x.cols; ++j)
        for (std::size_t i = 0; i < x.rows; ++i) out.a.push_back(x(i, j));
    return out;
}

template <Ring R>
M<R> dagger(const R& r, const M<R>& x) {
    if (!r.has_star()) throw InputError("MissingInvolution", "dagger needs a star on the ring");
    auto t = transpose(x);
    for (auto& e : t.a) e = r.star(e);
    return t;
}

// A ▷ B: block (k,l) is A * b_kl. Row index k*rows(A)+i.
template <Ring R>
M<R> kron_right(const R& r, const M<R>& x, const M<R>& y) {
    auto out = zeros(r, x.rows * y.rows, x.cols * y.cols);
    for (std::size_t k = 0; k < y.rows; ++k)
        for (std::size_t l = 0; l < y.cols; ++l) {
            const auto& b = y(k, l);
            if (r.is_zero(b)) continue;
            for (std::size_t i = 0; i < x.rows; ++i)
                for (std::size_t j = 0; j < x.cols; ++j)
                    out(k * x.rows + i, l * x.cols + j) = r.mul(x(i, j), b);
        }
    return out;
}

// A ◁ B: block (i,j) is a_ij * B. Row index i*rows(B)+k.
template <Ring R>
M<R> kron_left(const R& r, const M<R>& x, const M<R>& y) {
    auto out = zeros(r, x.rows * y.rows, x.cols * y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) {
            const auto& aij = x(i, j);
            if (r.is_zero(aij)) continue;
            for (std::size_t k = 0; k < y.rows; ++k)
                for (std::size_t l = 0; l < y.cols; ++l)
                    out(i * y.rows + k, j * y.cols + l) = r.mul(aij, y(k, l));
        }
    return out;
}

template <class E, class F>
auto map(const Mat<E>& x, F&& f) {
    using Out = decltype(f(x.a[0]));
    Mat<Out> out;
    out.rows = x.rows;
    out.cols = x.cols;
    out.a.reserve(x.a.size());
    for (const auto& e : x.a) out.a.push_back(f(e));
    return out;
}

template <Ring R>
bool is_zero(const R& r, const M<R>& x) {
    for (const auto& e : x.a)
        if (!r.is_zero(e)) return false;
    return true;
}

template <Ring R>
M<R> commutator(const R& r, const M<R>& x, const M<R>& y) {
    return sub(r, mul(r, x, y), mul(r, y, x));
}

// Standard unit row e_i of length n.
template <Ring R>
M<R> unit_row(const R& r, std::size_t n, std::size_t i) {
    auto m = zeros(r, 1, n);
    m(0, i) = r.one();
    return m;
}

template <class E>
Mat<E> block(const Mat<E>& x, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
    Mat<E> out;
    out.rows = nr;
    out.cols = nc;
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) out.a.push_back(x(r0 + i, c0 + j));
    return out;
}

template <Ring R>
std::string show(const R& r, const M<R>& x) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < x.rows; ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < x.cols; ++j) {
            if (j) os << ", ";
            os << r.show(x(i, j));
        }
    }
    os << "]";
    return os.str();
}

}  // namespace mat
}  // namespace sgr
