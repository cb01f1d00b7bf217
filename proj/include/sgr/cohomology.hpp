#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include "sgr/lift.hpp"
#include "sgr/linalg.hpp"

namespace sgr {

// ---------------------------------------------------------------- center

template <Ring R>
struct CenterBasis {
    std::vector<typename R::Element> basis;
    std::vector<typename R::Element> window;  // spanning list the basis centralizes
};

namespace detail {

// Coefficient matrix of `elems` (as columns) and the right-hand side `target`
// over the union of coordinate keys.
template <Ring R>
std::pair<linalg::Dense, linalg::Vec> coord_system(const R& r, const std::vector<typename R::Element>& elems,
                                                   const typename R::Element& target) {
    std::map<std::string, std::size_t> keys;
    std::vector<std::map<std::string, Scalar>> cs;
    for (const auto& e : elems) cs.push_back(r.coords(e));
    auto tc = r.coords(target);
    for (const auto& c : cs)
        for (const auto& [k, v] : c) keys.emplace(k, keys.size());
    for (const auto& [k, v] : tc) keys.emplace(k, keys.size());
    linalg::Dense m(keys.size(), linalg::Vec(elems.size()));
    linalg::Vec b(keys.size());
    for (std::size_t j = 0; j < cs.size(); ++j)
        for (const auto& [k, v] : cs[j]) m[keys.at(k)][j] = v;
    for (const auto& [k, v] : tc) b[keys.at(k)] = v;
    return {m, b};
}

template <Ring R>
typename R::Element combination(const R& r, const std::vector<typename R::Element>& elems, const linalg::Vec& c) {
    auto acc = r.zero();
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (!c[i].is_zero()) acc = r.add(acc, r.scale(c[i], elems[i]));
    return acc;
}

}  // namespace detail

// Coefficients of z in the span of `elems`, if it lies there.
template <Ring R>
std::optional<linalg::Vec> span_coords(const R& r, const std::vector<typename R::Element>& elems,
                                       const typename R::Element& z) {
    auto [m, b] = detail::coord_system(r, elems, z);
    return linalg::solve(m, b, elems.size());
}

// Centralizer of the window inside its span. Throws InputError
// "WindowNotClosed" when a commutator of window elements leaves the span.
template <Ring R>
CenterBasis<R> center_basis(const R& r, const std::vector<typename R::Element>& window) {
    using E = typename R::Element;
    // independent part of the window (pivot columns of its coordinate matrix)
    std::vector<E> indep;
    {
        auto [m0, b0] = detail::coord_system(r, window, r.zero());
        for (auto c : linalg::rref(m0, window.size())) indep.push_back(window[c]);
    }
    const std::size_t n = indep.size();
    std::vector<std::vector<E>> comm(n, std::vector<E>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            comm[i][j] = commutator(r, indep[i], indep[j]);
            if (j > i && !span_coords(r, indep, comm[i][j]))
                throw InputError("WindowNotClosed", r.show(comm[i][j]) + " is outside the window span");
        }
    // rows: coordinates of sum_i c_i [w_i, w_j] for each j and key
    linalg::Dense m;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<E> col;
        for (std::size_t i = 0; i < n; ++i) col.push_back(comm[i][j]);
        auto [mj, bj] = detail::coord_system(r, col, r.zero());
        m.insert(m.end(), mj.begin(), mj.end());
    }
    CenterBasis<R> cb;
    cb.window = window;
    for (const auto& v : linalg::kernel(m, n)) cb.basis.push_back(detail::combination(r, indep, v));
    return cb;
}

template <Ring R>
bool is_central(const R& r, const std::vector<typename R::Element>& window, const typename R::Element& z) {
    for (const auto& w : window)
        if (!(r.mul(z, w) == r.mul(w, z))) return false;
    return true;
}

// ---------------------------------------------------------------- beta action

template <Ring R>
using Action = std::function<typename R::Element(int, const typename R::Element&)>;

// beta_g(z) = y_{g^-1}^t z x_{g^-1}, checked against s z = beta_g(z) s on
// the entries of x_g. Throws NotCentral / ActionCheckFailed.
template <GradedRing S>
typename S::Base::Element beta_action(const S& s, const FrameSystem<S>& fr, int g, const typename S::Base::Element& z,
                                      const std::vector<typename S::Base::Element>& window = {}) {
    const auto& R = s.base();
    if (!window.empty() && !is_central(R, window, z)) throw MathError("NotCentral", R.show(z));
    const auto& fi = fr.at(fr.group.inv(g));
    const auto zs = s.from_base(z);
    auto acc = s.zero();
    for (std::size_t i = 0; i < fi.size(); ++i) acc = s.add(acc, s.mul(s.mul(fi.y(i, 0), zs), fi.x(i, 0)));
    auto out = s.to_base(acc);
    const auto& fg = fr.at(g);
    for (std::size_t i = 0; i < fg.size(); ++i)
        if (!(s.mul(fg.x(i, 0), zs) == s.mul(s.from_base(out), fg.x(i, 0))))
            throw MathError("ActionCheckFailed", "s z != beta_g(z) s in degree " + fr.group.name(g));
    return out;
}

template <GradedRing S>
Action<typename S::Base> frame_action(const S& s, const FrameSystem<S>& fr) {
    return [s, fr](int g, const typename S::Base::Element& z) { return beta_action(s, fr, g, z); };
}

// ---------------------------------------------------------------- cochains

template <class E>
struct Cochain {
    int degree = 0;
    std::map<std::vector<int>, E> values;

    const E& at(const std::vector<int>& t) const {
        auto it = values.find(t);
        if (it == values.end()) throw OutOfWindow("cochain has no value at this tuple");
        return it->second;
    }
};

// p-tuples whose contiguous products all stay in the group model.
inline std::vector<std::vector<int>> admissible_tuples(const GroupModel& G, int p) {
    std::vector<std::vector<int>> out{{}};
    for (int k = 0; k < p; ++k) {
        std::vector<std::vector<int>> next;
        for (const auto& t : out)
            for (int g : G.elements()) {
                auto u = t;
                u.push_back(g);
                bool ok = true;
                for (std::size_t a = 0; a < u.size() && ok; ++a) {
                    int prod = u[a];
                    for (std::size_t b = a + 1; b < u.size() && ok; ++b) {
                        auto m = G.mul(prod, u[b]);
                        if (!m) ok = false;
                        else prod = *m;
                    }
                }
                if (ok) next.push_back(std::move(u));
            }
        out = std::move(next);
    }
    return out;
}

// (d f)(g0..gp) = beta_{g0} f(g1..gp) + sum_j (-1)^j f(.., g_{j-1} g_j, ..) + (-1)^{p+1} f(g0..g_{p-1})
template <Ring R>
Cochain<typename R::Element> cochain_differential(const R& r, const GroupModel& G, const Action<R>& beta,
                                                  const Cochain<typename R::Element>& f) {
    const int p = f.degree;
    Cochain<typename R::Element> out;
    out.degree = p + 1;
    for (const auto& t : admissible_tuples(G, p + 1)) {
        std::vector<int> tail(t.begin() + 1, t.end());
        auto acc = beta(t[0], f.at(tail));
        for (int j = 1; j <= p; ++j) {
            std::vector<int> merged;
            for (int k = 0; k <= p; ++k) {
                if (k == j) continue;
                merged.push_back(k == j - 1 ? G.mul_or_throw(t[static_cast<std::size_t>(k)], t[static_cast<std::size_t>(j)])
                                            : t[static_cast<std::size_t>(k)]);
            }
            auto v = f.at(merged);
            acc = j % 2 ? sub(r, acc, v) : r.add(acc, v);
        }
        std::vector<int> head(t.begin(), t.end() - 1);
        acc = (p + 1) % 2 ? sub(r, acc, f.at(head)) : r.add(acc, f.at(head));
        out.values.emplace(t, acc);
    }
    return out;
}

template <Ring R>
Report cocycle_check(const R& r, const GroupModel& G, const Action<R>& beta, const Cochain<typename R::Element>& f) {
    Report rep;
    auto df = cochain_differential(r, G, beta, f);
    for (const auto& [t, v] : df.values) {
        std::string where = "(";
        for (std::size_t k = 0; k < t.size(); ++k) where += (k ? "," : "") + G.name(t[k]);
        rep.add("cocycle", r.is_zero(v), where + ") -> " + r.show(v));
    }
    return rep;
}

template <Ring R>
Cochain<typename R::Element> cochain_sub(const R& r, const Cochain<typename R::Element>& a,
                                         const Cochain<typename R::Element>& b) {
    Cochain<typename R::Element> out = a;
    for (auto& [t, v] : out.values) v = sub(r, v, b.at(t));
    return out;
}

namespace detail {

// Integer window: xi(1) = 0 and dxi(n,1) = Delta(n,1) fix xi everywhere.
template <Ring R>
Cochain<typename R::Element> solve_window(const R& r, const GroupModel& G, const Action<R>& beta,
                                          const Cochain<typename R::Element>& delta) {
    const int N = G.bound();
    std::map<int, typename R::Element> xi;
    xi[1] = r.zero();
    const auto& x1 = xi[1];
    for (int n = 1; n < N; ++n) xi[n + 1] = sub(r, r.add(xi[n], beta(n, x1)), delta.at({n, 1}));
    for (int n = 1; n > -N; --n) xi[n - 1] = sub(r, r.add(delta.at({n - 1, 1}), xi[n]), beta(n - 1, x1));
    Cochain<typename R::Element> out;
    out.degree = 1;
    for (const auto& [g, v] : xi) out.values.emplace(std::vector<int>{g}, v);
    return out;
}

// Finite group: linear system over the center coordinates.
template <Ring R>
Cochain<typename R::Element> solve_finite(const R& r, const GroupModel& G, const Action<R>& beta,
                                          const Cochain<typename R::Element>& delta, const CenterBasis<R>& cb) {
    using E = typename R::Element;
    const auto& els = G.elements();
    const std::size_t m = cb.basis.size(), nu = els.size() * m;
    auto index = [&](int g) { return static_cast<std::size_t>(std::find(els.begin(), els.end(), g) - els.begin()); };
    std::map<std::string, std::size_t> keys;
    std::vector<std::pair<std::map<std::string, Scalar>, std::vector<std::map<std::string, Scalar>>>> eqs;
    for (const auto& t : admissible_tuples(G, 2)) {
        const int g = t[0], h = t[1], gh = G.mul_or_throw(g, h);
        // column (x, k): coefficient of xi(x) in basis direction k
        std::vector<E> cols(nu, r.zero());
        for (std::size_t k = 0; k < m; ++k) {
            const auto& b = cb.basis[k];
            cols[index(h) * m + k] = r.add(cols[index(h) * m + k], beta(g, b));
            cols[index(g) * m + k] = r.add(cols[index(g) * m + k], b);
            cols[index(gh) * m + k] = sub(r, cols[index(gh) * m + k], b);
        }
        std::vector<std::map<std::string, Scalar>> cc;
        for (const auto& c : cols) cc.push_back(r.coords(c));
        auto rhs = r.coords(delta.at(t));
        for (const auto& c : cc)
            for (const auto& [k, v] : c) keys.emplace(k, keys.size());
        for (const auto& [k, v] : rhs) keys.emplace(k, keys.size());
        eqs.emplace_back(std::move(rhs), std::move(cc));
    }
    linalg::Dense A;
    linalg::Vec b;
    for (const auto& [rhs, cc] : eqs) {
        linalg::Dense block(keys.size(), linalg::Vec(nu));
        linalg::Vec bb(keys.size());
        for (std::size_t j = 0; j < nu; ++j)
            for (const auto& [k, v] : cc[j]) block[keys.at(k)][j] = v;
        for (const auto& [k, v] : rhs) bb[keys.at(k)] = v;
        A.insert(A.end(), block.begin(), block.end());
        b.insert(b.end(), bb.begin(), bb.end());
    }
    for (auto& row : A) row.resize(nu);
    auto sol = linalg::solve(A, b, nu);
    if (!sol) {
        // certificate: lambda with lambda A = 0 and lambda b != 0
        linalg::Dense At(nu, linalg::Vec(A.size()));
        for (std::size_t i = 0; i < A.size(); ++i)
            for (std::size_t j = 0; j < nu; ++j) At[j][i] = A[i][j];
        std::ostringstream os;
        for (const auto& lam : linalg::kernel(At, A.size())) {
            Scalar dot;
            for (std::size_t i = 0; i < lam.size(); ++i) dot += lam[i] * b[i];
            if (dot.is_zero()) continue;
            os << "lambda with lambda*A = 0 and lambda*b = " << dot.str() << ":";
            for (std::size_t i = 0; i < lam.size(); ++i)
                if (!lam[i].is_zero()) os << " [" << i << "]=" << lam[i].str();
            break;
        }
        throw MathError("NoSolution", "2-cocycle is not a coboundary; " + os.str());
    }
    Cochain<E> out;
    out.degree = 1;
    for (int g : els) {
        linalg::Vec c(sol->begin() + static_cast<long>(index(g) * m), sol->begin() + static_cast<long>((index(g) + 1) * m));
        out.values.emplace(std::vector<int>{g}, combination(r, cb.basis, c));
    }
    return out;
}

}  // namespace detail

// xi with d xi = delta. Throws CocycleViolation if delta is not a cocycle,
// NoSolution (finite groups, with a certificate) if the class is nonzero.
template <Ring R>
Cochain<typename R::Element> coboundary_solve(const R& r, const GroupModel& G, const Action<R>& beta,
                                              const Cochain<typename R::Element>& delta, const CenterBasis<R>& cb) {
    cocycle_check(r, G, beta, delta).require("CocycleViolation");
    auto xi = G.is_window() ? detail::solve_window(r, G, beta, delta) : detail::solve_finite(r, G, beta, delta, cb);
    auto dxi = cochain_differential(r, G, beta, xi);
    for (const auto& [t, v] : delta.values)
        if (!(dxi.at(t) == v)) throw MathError("NoSolution", "d xi differs from delta");
    return xi;
}

// ---------------------------------------------------------------- defect

// (eta(g) > 1) w + alpha_g(eta(h)) w + w (delta(alpha_gh(1)) - eta(gh)) - delta(w)
template <Ring R>
Mat<typename R::Element> defect_theta(const FactorSystem<R>& fs, const Derivation<R>& d, const EtaFamily<R>& eta,
                                      int g, int h) {
    const auto& r = fs.ring;
    const int gh = fs.group.mul_or_throw(g, h);
    const auto& w = fs.w(g, h);
    auto t = mat::mul(r, mat::kron_right(r, eta.at(g), mat::identity(r, fs.n(h))), w);
    t = mat::add(r, t, mat::mul(r, fs.alpha_of(g, eta.at(h)), w));
    t = mat::add(r, t, mat::mul(r, w, mat::sub(r, d(r, fs.alpha_one(gh)), eta.at(gh))));
    return mat::sub(r, t, d(r, w));
}

// Covariant derivative of a homogeneous element of degree g.
template <GradedRing S>
typename S::Element nabla(const S& s, const FrameSystem<S>& fr, const Derivation<typename S::Base>& d,
                          const EtaFamily<typename S::Base>& eta, int g, const typename S::Element& x) {
    const auto& R = s.base();
    const auto& f = fr.at(g);
    auto u = hom_decompose(s, f, x);
    return compose(s, f, mat::add(R, d(R, u), mat::mul(R, u, eta.at(g))));
}

// nabla(a) b + a nabla(b) - nabla(a b)
template <GradedRing S>
typename S::Element defect_map(const S& s, const FrameSystem<S>& fr, const Derivation<typename S::Base>& d,
                               const EtaFamily<typename S::Base>& eta, int g, const typename S::Element& a, int h,
                               const typename S::Element& b) {
    const int gh = fr.group.mul_or_throw(g, h);
    auto lhs = s.add(s.mul(nabla(s, fr, d, eta, g, a), b), s.mul(a, nabla(s, fr, d, eta, h, b)));
    return sub(s, lhs, nabla(s, fr, d, eta, gh, s.mul(a, b)));
}

// z = beta_gh(y_gh^t omega~(g,h) Theta(g,h) x_gh), validated on random
// factored samples a = u x_g, b = v x_h: Delta(a,b) = z a b and
// Delta(a,b) = u alpha_g(v) Theta x_gh. Throws CentralExtractionMismatch.
template <GradedRing S>
typename S::Base::Element defect_central(const S& s, const FrameSystem<S>& fr,
                                         const FactorSystem<typename S::Base>& fs,
                                         const Derivation<typename S::Base>& d,
                                         const EtaFamily<typename S::Base>& eta, int g, int h, int oracle_samples = 10) {
    const auto& R = s.base();
    const int gh = fs.group.mul_or_throw(g, h);
    const auto theta = defect_theta(fs, d, eta, g, h);
    const auto m = mat::mul(R, fs.wt(g, h), theta);
    const auto& f = fr.at(gh);
    auto acc = s.zero();
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j)
            if (!R.is_zero(m(i, j)))
                acc = s.add(acc, s.mul(s.mul(f.y(i, 0), s.from_base(m(i, j))), f.x(j, 0)));
    const auto z = beta_action(s, fr, gh, s.to_base(acc));

    auto elems = fs.test_elements();
    elems.push_back(R.one());
    if (!is_central(R, elems, z))
        throw MathError("CentralExtractionMismatch", "z = " + R.show(z) + " is not central on the samples");
    std::mt19937 rng(static_cast<unsigned>(1000 + 37 * g + h));
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    const auto zs = s.from_base(z);
    for (int t = 0; t < oracle_samples; ++t) {
        auto u = mat::zeros(R, 1, fs.n(g));
        auto v = mat::zeros(R, 1, fs.n(h));
        for (auto& e : u.a) e = elems[pick(rng)];
        for (auto& e : v.a) e = elems[pick(rng)];
        auto a = compose(s, fr.at(g), u), b = compose(s, fr.at(h), v);
        auto lhs = defect_map(s, fr, d, eta, g, a, h, b);
        if (!(lhs == s.mul(zs, s.mul(a, b))))
            throw MathError("CentralExtractionMismatch",
                            "Delta(a,b) != z a b at (" + fs.group.name(g) + "," + fs.group.name(h) + ")");
        auto via_theta = compose(s, f, mat::mul(R, mat::mul(R, u, fs.alpha_of(g, v)), theta));
        if (!(lhs == via_theta))
            throw MathError("CentralExtractionMismatch",
                            "Delta(a,b) != u alpha_g(v) Theta x at (" + fs.group.name(g) + "," + fs.group.name(h) + ")");
    }
    return z;
}

// Delta on every admissible pair of the group model.
template <GradedRing S>
Cochain<typename S::Base::Element> defect_cochain(const S& s, const FrameSystem<S>& fr,
                                                  const FactorSystem<typename S::Base>& fs,
                                                  const Derivation<typename S::Base>& d,
                                                  const EtaFamily<typename S::Base>& eta, int oracle_samples = 10) {
    Cochain<typename S::Base::Element> out;
    out.degree = 2;
    for (const auto& t : admissible_tuples(fs.group, 2))
        out.values.emplace(t, defect_central(s, fr, fs, d, eta, t[0], t[1], oracle_samples));
    return out;
}

// eta'(g) = eta(g) - xi(g) alpha_g(1)
template <Ring R>
EtaFamily<R> shift_eta(const FactorSystem<R>& fs, const EtaFamily<R>& eta, const Cochain<typename R::Element>& xi) {
    EtaFamily<R> out;
    for (const auto& [g, m] : eta) out.emplace(g, mat::sub(fs.ring, m, mat::lmul(fs.ring, xi.at({g}), fs.alpha_one(g))));
    return out;
}

template <GradedRing S>
struct LiftOutcome {
    std::optional<GradedDerivation<S>> lift;
    EtaFamily<typename S::Base> eta;  // shifted family when a lift exists
    Cochain<typename S::Base::Element> delta;
    std::optional<Cochain<typename S::Base::Element>> xi;
    std::string obstruction;  // certificate text when no lift exists
};

// Delta, coboundary solve, eta shift, then build_lift. Throws MathError
// "Cond1Violation" when eta fails cond1.
template <GradedRing S>
LiftOutcome<S> lift_via_cohomology(const S& s, const FrameSystem<S>& fr, const FactorSystem<typename S::Base>& fs,
                                   const Derivation<typename S::Base>& d, const EtaFamily<typename S::Base>& eta,
                                   const CenterBasis<typename S::Base>& cb) {
    const auto& R = s.base();
    auto rep = check_lift_conditions(fs, d, eta);
    for (const auto& c : rep.checks())
        if (!c.pass && c.tag == "cond1") throw MathError("Cond1Violation", c.detail);
    LiftOutcome<S> out;
    out.delta = defect_cochain(s, fr, fs, d, eta);
    auto beta = frame_action(s, fr);
    try {
        out.xi = coboundary_solve(R, fs.group, beta, out.delta, cb);
    } catch (const MathError& e) {
        if (e.tag() != "NoSolution") throw;
        out.obstruction = e.what();
        return out;
    }
    out.eta = canonical_eta(fs, shift_eta(fs, eta, *out.xi));
    out.lift = build_lift(s, fr, fs, d, out.eta);
    return out;
}

// ---------------------------------------------------------------- gauge correspondence

// eta(gh) = eta(g) + beta_g(eta(h)) with central values.
template <Ring R>
Report crossed_hom_check(const R& r, const GroupModel& G, const Action<R>& beta,
                         const std::map<int, typename R::Element>& eta, const std::vector<typename R::Element>& window) {
    Report rep;
    for (const auto& [g, v] : eta) rep.add("central", is_central(r, window, v), G.name(g));
    for (const auto& t : admissible_tuples(G, 2)) {
        int gh = G.mul_or_throw(t[0], t[1]);
        rep.add("crossed_hom", eta.at(gh) == r.add(eta.at(t[0]), beta(t[0], eta.at(t[1]))),
                "(" + G.name(t[0]) + "," + G.name(t[1]) + ")");
    }
    return rep;
}

// s -> eta(g) s on degree g. Throws NotCrossedHom.
template <GradedRing S>
GradedDerivation<S> gauge_from_crossed_hom(const S& s, const FrameSystem<S>& fr,
                                           const std::map<int, typename S::Base::Element>& eta,
                                           const std::vector<typename S::Base::Element>& window) {
    crossed_hom_check(s.base(), fr.group, frame_action(s, fr), eta, window).require("NotCrossedHom");
    return {[s, eta](const typename S::Element& x) {
        auto out = s.zero();
        for (const auto& [g, part] : s.homogeneous_parts(x)) out = s.add(out, s.mul(s.from_base(eta.at(g)), part));
        return out;
    }};
}

// eta(g) = sum_i D(y_{g^-1,i}) x_{g^-1,i}. Throws NotGauge when D is nonzero
// on the principal component samples or does not act by eta(g) on x_g.
template <GradedRing S>
std::map<int, typename S::Base::Element> crossed_hom_from_gauge(const S& s, const FrameSystem<S>& fr,
                                                                const GradedDerivation<S>& D,
                                                                const std::vector<typename S::Base::Element>& samples) {
    for (const auto& r : samples)
        if (!s.is_zero(D(s.from_base(r)))) throw MathError("NotGauge", "D is nonzero on " + s.base().show(r));
    std::map<int, typename S::Base::Element> eta;
    for (const auto& [g, f] : fr.cols) {
        const auto& fi = fr.at(fr.group.inv(g));
        auto acc = s.zero();
        for (std::size_t i = 0; i < fi.size(); ++i) acc = s.add(acc, s.mul(D(fi.y(i, 0)), fi.x(i, 0)));
        auto e = s.to_base(acc);
        for (std::size_t i = 0; i < f.size(); ++i)
            if (!(D(f.x(i, 0)) == s.mul(s.from_base(e), f.x(i, 0))))
                throw MathError("NotGauge", "D does not act by a central element in degree " + fr.group.name(g));
        eta.emplace(g, e);
    }
    return eta;
}

}  // namespace sgr
