#pragma once

#include <string>
#include <vector>

#include "sgr/cohomology.hpp"

namespace sgr {

// ---------------------------------------------------------------- graded derivation algebra

template <GradedRing S>
GradedDerivation<S> gd_linear(const S& s, std::vector<std::pair<Scalar, GradedDerivation<S>>> parts) {
    return {[s, parts = std::move(parts)](const typename S::Element& x) {
        auto acc = s.zero();
        for (const auto& [c, D] : parts)
            if (!c.is_zero()) acc = s.add(acc, s.scale(c, D(x)));
        return acc;
    }};
}

template <GradedRing S>
GradedDerivation<S> gd_bracket(const S& s, const GradedDerivation<S>& a, const GradedDerivation<S>& b) {
    return {[s, a, b](const typename S::Element& x) { return sub(s, a(b(x)), b(a(x))); }};
}

// ---------------------------------------------------------------- sections

// delta_1..delta_d spanning g, [delta_i, delta_j] = sum_k c[i][j][k] delta_k,
// and a chosen lift of each delta_i.
template <GradedRing S>
struct LieBasisSection {
    using R = typename S::Base;
    std::vector<std::string> names;
    std::vector<Derivation<R>> derivations;
    std::vector<GradedDerivation<S>> lifts;
    std::vector<std::vector<std::vector<Scalar>>> c;

    std::size_t dim() const { return derivations.size(); }
    static std::vector<std::vector<std::vector<Scalar>>> abelian(std::size_t d) {
        return std::vector<std::vector<std::vector<Scalar>>>(d, std::vector<std::vector<Scalar>>(d, std::vector<Scalar>(d)));
    }
};

// sigma applied to sum_k coeffs[k] delta_k
template <GradedRing S>
GradedDerivation<S> section_at(const S& s, const LieBasisSection<S>& sec, const std::vector<Scalar>& coeffs) {
    std::vector<std::pair<Scalar, GradedDerivation<S>>> parts;
    for (std::size_t k = 0; k < sec.dim(); ++k) parts.emplace_back(coeffs[k], sec.lifts[k]);
    return gd_linear(s, std::move(parts));
}

// Bracket closure on base samples and res(sigma(delta_i)) = delta_i.
template <GradedRing S>
Report section_checks(const S& s, const LieBasisSection<S>& sec, const std::vector<typename S::Base::Element>& samples) {
    const auto& R = s.base();
    Report rep;
    const std::size_t d = sec.dim();
    if (sec.lifts.size() != d || sec.c.size() != d) throw InputError("DimensionMismatch", "section data sizes differ");
    for (std::size_t i = 0; i < d; ++i) {
        for (const auto& x : samples)
            rep.add("restricts", sec.lifts[i](s.from_base(x)) == s.from_base(sec.derivations[i](R, x)),
                    sec.names[i] + " on " + R.show(x));
        for (std::size_t j = 0; j < d; ++j) {
            auto br = bracket(R, sec.derivations[i], sec.derivations[j]);
            for (const auto& x : samples) {
                auto rhs = R.zero();
                for (std::size_t k = 0; k < d; ++k)
                    if (!sec.c[i][j][k].is_zero()) rhs = R.add(rhs, R.scale(sec.c[i][j][k], sec.derivations[k](R, x)));
                rep.add("bracket_closure", br(R, x) == rhs, sec.names[i] + "," + sec.names[j]);
            }
        }
    }
    return rep;
}

// F(i,j) = [sigma_i, sigma_j] - sigma([delta_i, delta_j])
template <GradedRing S>
GradedDerivation<S> curvature_map(const S& s, const LieBasisSection<S>& sec, std::size_t i, std::size_t j) {
    auto sig = section_at(s, sec, sec.c[i][j]);
    return gd_linear(s, {{Scalar(1), gd_bracket(s, sec.lifts[i], sec.lifts[j])}, {Scalar(-1), sig}});
}

// F(i,j) as a crossed homomorphism. Throws MathError "NotGauge" when F does
// not vanish on the principal component samples.
template <GradedRing S>
std::map<int, typename S::Base::Element> atiyah_curvature(const S& s, const FrameSystem<S>& fr,
                                                          const LieBasisSection<S>& sec, std::size_t i, std::size_t j,
                                                          const std::vector<typename S::Base::Element>& samples) {
    return crossed_hom_from_gauge(s, fr, curvature_map(s, sec, i, j), samples);
}

// Alternating and bilinear on the spanning set, evaluated on samples.
template <GradedRing S>
Report curvature_form_checks(const S& s, const LieBasisSection<S>& sec, const std::vector<typename S::Element>& samples) {
    Report rep;
    const std::size_t d = sec.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto F = curvature_map(s, sec, i, j), Ft = curvature_map(s, sec, j, i);
            for (const auto& x : samples) rep.add("alternating", s.is_zero(s.add(F(x), Ft(x))), sec.names[i] + "," + sec.names[j]);
        }
    return rep;
}

// sum_cyc F([i,j],k) = sum_cyc [sigma_i, F(j,k)] on every basis triple.
template <GradedRing S>
Report bianchi_check(const S& s, const LieBasisSection<S>& sec, const std::vector<typename S::Element>& samples) {
    Report rep;
    const std::size_t d = sec.dim();
    auto F_of_bracket = [&](std::size_t i, std::size_t j, std::size_t k) {
        std::vector<std::pair<Scalar, GradedDerivation<S>>> parts;
        for (std::size_t l = 0; l < d; ++l)
            if (!sec.c[i][j][l].is_zero()) parts.emplace_back(sec.c[i][j][l], curvature_map(s, sec, l, k));
        return gd_linear(s, std::move(parts));
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                const std::size_t t[3] = {i, j, k};
                std::vector<std::pair<Scalar, GradedDerivation<S>>> lhs, rhs;
                for (int r = 0; r < 3; ++r) {
                    auto a = t[r], b = t[(r + 1) % 3], c = t[(r + 2) % 3];
                    lhs.emplace_back(Scalar(1), F_of_bracket(a, b, c));
                    rhs.emplace_back(Scalar(1), gd_bracket(s, sec.lifts[a], curvature_map(s, sec, b, c)));
                }
                auto L = gd_linear(s, lhs), Rr = gd_linear(s, rhs);
                bool ok = true;
                for (const auto& x : samples) ok = ok && L(x) == Rr(x);
                rep.add("bianchi", ok, sec.names[i] + "," + sec.names[j] + "," + sec.names[k]);
            }
    return rep;
}

// ---------------------------------------------------------------- matrix form

// Curvature of the row connections u -> (delta_k(u) + u eta_k) p:
// R(u) = nabla_1 nabla_2 u - nabla_2 nabla_1 u - nabla_[1,2] u.
template <Ring R>
Mat<typename R::Element> row_curvature(const R& r, const Derivation<R>& d1, const Derivation<R>& d2,
                                       const Derivation<R>& d12, const Mat<typename R::Element>& eta1,
                                       const Mat<typename R::Element>& eta2, const Mat<typename R::Element>& eta12,
                                       const Mat<typename R::Element>& p, const Mat<typename R::Element>& u) {
    auto nab = [&](const Derivation<R>& d, const Mat<typename R::Element>& e, const Mat<typename R::Element>& w) {
        return mat::mul(r, mat::add(r, d(r, w), mat::mul(r, w, e)), p);
    };
    auto up = mat::mul(r, u, p);
    auto a = nab(d1, eta1, nab(d2, eta2, up));
    auto b = nab(d2, eta2, nab(d1, eta1, up));
    return mat::sub(r, mat::sub(r, a, b), nab(d12, eta12, up));
}

// delta_1(eta_2) - delta_2(eta_1) + [eta_2, eta_1] - eta_[1,2]. The commutator
// order follows from composing the row connections (eta acts on the right).
template <Ring R>
Mat<typename R::Element> omega_matrix(const R& r, const Derivation<R>& d1, const Derivation<R>& d2,
                                      const Mat<typename R::Element>& eta1, const Mat<typename R::Element>& eta2,
                                      const Mat<typename R::Element>& eta12) {
    auto out = mat::sub(r, d1(r, eta2), d2(r, eta1));
    out = mat::add(r, out, mat::commutator(r, eta2, eta1));
    return mat::sub(r, out, eta12);
}

// Omega for eta(delta) = delta(p): the commutator [delta_2(p), delta_1(p)].
template <Ring R>
Mat<typename R::Element> grassmann_omega(const R& r, const Derivation<R>& d1, const Derivation<R>& d2,
                                         const Mat<typename R::Element>& p) {
    return mat::commutator(r, d2(r, p), d1(r, p));
}

template <Ring R>
struct CurvatureMatrices {
    Mat<typename R::Element> eta_i, eta_j, omega;
};

// eta_sigma(delta, g) = sigma(delta)(x_g) y_g^t and Omega at degree g. Checks
// F(u x_g) = (u Omega) x_g on basis rows and Omega alpha_g(1) = f(g) alpha_g(1)
// for the crossed homomorphism f of F. Throws MathError "ConsistencyMismatch".
template <GradedRing S>
CurvatureMatrices<typename S::Base> curvature_matrices(const S& s, const FrameSystem<S>& fr,
                                                       const FactorSystem<typename S::Base>& fs,
                                                       const LieBasisSection<S>& sec, std::size_t i, std::size_t j,
                                                       int g, const std::vector<typename S::Base::Element>& samples) {
    const auto& R = s.base();
    FrameSystem<S> one;
    one.group = fr.group;
    one.cols.emplace(g, fr.at(g));
    auto eta_of = [&](const GradedDerivation<S>& D) { return eta_from_lift(s, one, D).at(g); };
    CurvatureMatrices<typename S::Base> out;
    out.eta_i = eta_of(sec.lifts[i]);
    out.eta_j = eta_of(sec.lifts[j]);
    auto eta12 = eta_of(section_at(s, sec, sec.c[i][j]));
    out.omega = omega_matrix(R, sec.derivations[i], sec.derivations[j], out.eta_i, out.eta_j, eta12);
    auto F = curvature_map(s, sec, i, j);
    const auto& f = fr.at(g);
    const auto p = fs.alpha_one(g);
    for (std::size_t k = 0; k < f.size(); ++k) {
        auto u = mat::unit_row(R, f.size(), k);
        if (!(F(f.x(k, 0)) == compose(s, f, mat::mul(R, u, out.omega))))
            throw MathError("ConsistencyMismatch", "F(x_g) != Omega x_g at degree " + fr.group.name(g));
    }
    auto fg = atiyah_curvature(s, fr, sec, i, j, samples).at(g);
    if (!(mat::mul(R, out.omega, p) == mat::lmul(R, fg, p)))
        throw MathError("ConsistencyMismatch", "Omega differs from the central value of F at degree " + fr.group.name(g));
    return out;
}

// ---------------------------------------------------------------- section change

// sigma' = sigma + psi with psi_k the gauge derivation of a crossed homomorphism.
template <GradedRing S>
LieBasisSection<S> section_change(const S& s, const FrameSystem<S>& fr, const LieBasisSection<S>& sec,
                                  const std::vector<std::map<int, typename S::Base::Element>>& psi,
                                  const std::vector<typename S::Base::Element>& window) {
    if (psi.size() != sec.dim()) throw InputError("DimensionMismatch", "one gauge element per basis derivation");
    LieBasisSection<S> out = sec;
    for (std::size_t k = 0; k < sec.dim(); ++k) {
        auto G = gauge_from_crossed_hom(s, fr, psi[k], window);
        out.lifts[k] = gd_linear(s, {{Scalar(1), sec.lifts[k]}, {Scalar(1), G}});
    }
    return out;
}

// F' = F + d psi + [psi, psi] with (d psi)(i,j) = [sigma_i, psi_j] - [sigma_j, psi_i] - psi_[i,j],
// and eta_sigma'(delta_k, g) = eta_sigma(delta_k, g) + psi_k(g) alpha_g(1).
template <GradedRing S>
Report section_change_checks(const S& s, const FrameSystem<S>& fr, const FactorSystem<typename S::Base>& fs,
                             const LieBasisSection<S>& sec,
                             const std::vector<std::map<int, typename S::Base::Element>>& psi,
                             const std::vector<typename S::Base::Element>& window,
                             const std::vector<typename S::Element>& samples) {
    const auto& R = s.base();
    Report rep;
    auto sec2 = section_change(s, fr, sec, psi, window);
    std::vector<GradedDerivation<S>> P;
    for (const auto& p : psi) P.push_back(gauge_from_crossed_hom(s, fr, p, window));
    const std::size_t d = sec.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<std::pair<Scalar, GradedDerivation<S>>> psi_br;
            for (std::size_t k = 0; k < d; ++k) psi_br.emplace_back(sec.c[i][j][k], P[k]);
            auto rhs = gd_linear(s, {{Scalar(1), curvature_map(s, sec, i, j)},
                                     {Scalar(1), gd_bracket(s, sec.lifts[i], P[j])},
                                     {Scalar(-1), gd_bracket(s, sec.lifts[j], P[i])},
                                     {Scalar(-1), gd_linear(s, psi_br)},
                                     {Scalar(1), gd_bracket(s, P[i], P[j])}});
            auto lhs = curvature_map(s, sec2, i, j);
            bool ok = true;
            for (const auto& x : samples) ok = ok && lhs(x) == rhs(x);
            rep.add("curvature_change", ok, sec.names[i] + "," + sec.names[j]);
        }
    for (std::size_t k = 0; k < d; ++k) {
        auto e1 = eta_from_lift(s, fr, sec.lifts[k]);
        auto e2 = eta_from_lift(s, fr, sec2.lifts[k]);
        for (const auto& [g, m] : e1) {
            auto expect = mat::add(R, m, mat::lmul(R, psi[k].at(g), fs.alpha_one(g)));
            rep.add("eta_gauge_shift", e2.at(g) == expect, sec.names[k] + " at " + fr.group.name(g));
        }
    }
    return rep;
}

// ---------------------------------------------------------------- Lecomte class, p = 1

struct LecomteVerdict {
    bool splits = false;
    std::vector<Scalar> xi;       // d xi = F when the class vanishes
    std::vector<Scalar> witness;  // lambda with lambda * A = 0, lambda * F != 0 otherwise
};

// Scalar F(i,j) for an integer-window crossed homomorphism f(g) = lambda g.
// Throws MathError "KernelNotCentralLine" otherwise.
template <GradedRing S>
Scalar gauge_scalar(const S& s, const FrameSystem<S>& fr, const std::map<int, typename S::Base::Element>& f) {
    const auto& R = s.base();
    if (!fr.group.is_window()) throw MathError("KernelNotCentralLine", "needs an integer window");
    auto one = f.at(1);
    Scalar lambda;
    if (!R.is_zero(one)) {
        auto c = span_coords(R, {R.one()}, one);
        if (!c) throw MathError("KernelNotCentralLine", "f(1) = " + R.show(one) + " is not a scalar");
        lambda = (*c)[0];
    }
    for (const auto& [g, v] : f)
        if (!(v == R.scale(lambda * Scalar(g), R.one())))
            throw MathError("KernelNotCentralLine", "f is not lambda * deg at " + fr.group.name(g));
    return lambda;
}

// Solves the Chevalley-Eilenberg system (d xi)(i,j) = -sum_k c_ijk xi_k = F(i,j), i < j.
inline LecomteVerdict lecomte_class_p1(const std::vector<std::vector<std::vector<Scalar>>>& c,
                                       const std::vector<std::vector<Scalar>>& F) {
    const std::size_t d = c.size();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (!(F[i][j] == -F[j][i])) throw InputError("NotAlternating", "F must be alternating");
    linalg::Dense A;
    linalg::Vec b;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            linalg::Vec row(d);
            for (std::size_t k = 0; k < d; ++k) row[k] = -c[i][j][k];
            A.push_back(row);
            b.push_back(F[i][j]);
        }
    LecomteVerdict v;
    if (auto sol = linalg::solve(A, b, d)) {
        v.splits = true;
        v.xi = *sol;
        return v;
    }
    linalg::Dense At(d, linalg::Vec(A.size()));
    for (std::size_t r = 0; r < A.size(); ++r)
        for (std::size_t k = 0; k < d; ++k) At[k][r] = A[r][k];
    for (const auto& lam : linalg::kernel(At, A.size())) {
        Scalar dot;
        for (std::size_t r = 0; r < lam.size(); ++r) dot += lam[r] * b[r];
        if (!dot.is_zero()) {
            v.witness = lam;
            break;
        }
    }
    return v;
}

}  // namespace sgr
