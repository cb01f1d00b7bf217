#pragma once

#include "sgr/facsys.hpp"

namespace sgr {

// z^dagger z for a column z; the Parseval condition asks for 1.
template <Ring R>
typename R::Element gram(const R& r, const Mat<typename R::Element>& z) {
    return mat::mul(r, mat::dagger(r, z), z)(0, 0);
}

template <Ring R>
Report parseval_witness_check(const R& r, const Mat<typename R::Element>& z) {
    Report rep;
    auto g = gram(r, z);
    rep.add("parseval:z^dagger z=1", g == r.one(), "z^dagger z = " + r.show(g));
    return rep;
}

// Throws NotParseval unless y = z^* entrywise and z^dagger z = 1.
template <GradedRing S>
void require_parseval(const S& s, const FrameColumn<S>& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!(f.y(i, 0) == s.star(f.x(i, 0))))
            throw MathError("NotParseval", "y is not z^* at row " + std::to_string(i));
    if (!(gram(s, f.x) == s.one())) throw MathError("NotParseval", "z^dagger z != 1");
}

// J_g(w) with (w z_g)^* = J_g(w) z_{g^-1}: expanding (z_g)_k^* = u_k z_{g^-1}
// with u_k = (z_g)_k^* y_{g^-1}^t gives J_g(w) = sum_k u_k alpha_{g^-1}(w_k^*).
// Both sides of the identity are compared before returning.
template <GradedRing S>
Mat<typename S::Base::Element> parseval_J(const S& s, const FrameSystem<S>& fr,
                                          const FactorSystem<typename S::Base>& fs, int g,
                                          const Mat<typename S::Base::Element>& w) {
    const auto& R = s.base();
    const int gi = fr.group.inv(g);
    const auto& fg = fr.at(g);
    const auto& fgi = fr.at(gi);
    require_parseval(s, fg);
    require_parseval(s, fgi);
    if (w.rows != 1 || w.cols != fg.size()) throw InputError("DimensionMismatch", "w must be 1 x n_g");
    auto J = mat::zeros(R, 1, fgi.size());
    for (std::size_t k = 0; k < fg.size(); ++k) {
        auto u = hom_decompose(s, fgi, s.star(fg.x(k, 0)));
        J = mat::add(R, J, mat::mul(R, u, fs.alpha_of(gi, R.star(w(0, k)))));
    }
    auto lhs = s.star(compose(s, fg, w));
    auto rhs = compose(s, fgi, J);
    if (!(lhs == rhs)) throw MathError("IdentityMismatch", "(w z_g)^* != J_g(w) z_{g^-1}");
    return J;
}

}  // namespace sgr
