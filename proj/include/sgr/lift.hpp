#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "sgr/derivation.hpp"
#include "sgr/facsys.hpp"
#include "sgr/parseval.hpp"

namespace sgr {

// g -> eta(g) in M_{n_g}(R), stored right-absorbed by alpha_g(1).
template <Ring R>
using EtaFamily = std::map<int, Mat<typename R::Element>>;

template <Ring R>
EtaFamily<R> zero_eta(const FactorSystem<R>& fs) {
    EtaFamily<R> eta;
    for (const auto& [g, a] : fs.alpha) eta.emplace(g, mat::zeros(fs.ring, a.size(), a.size()));
    return eta;
}

template <Ring R>
EtaFamily<R> canonical_eta(const FactorSystem<R>& fs, const EtaFamily<R>& eta) {
    EtaFamily<R> out;
    for (const auto& [g, m] : eta) out.emplace(g, mat::mul(fs.ring, m, fs.alpha_one(g)));
    return out;
}

// Lifting conditions for (delta, eta). cond1 is checked on fs.test_elements()
// plus `samples`; both sides are additive in r.
template <Ring R>
Report check_lift_conditions(const FactorSystem<R>& fs, const Derivation<R>& d, const EtaFamily<R>& eta,
                             const std::vector<typename R::Element>& samples = {}) {
    const auto& r = fs.ring;
    const auto& G = fs.group;
    Report rep;
    auto elems = fs.test_elements();
    elems.insert(elems.end(), samples.begin(), samples.end());
    auto eta_at = [&](int g) -> const Mat<typename R::Element>& {
        auto it = eta.find(g);
        if (it == eta.end()) throw InputError("MissingEta", "no eta for degree " + G.name(g));
        return it->second;
    };
    rep.add("eta:identity=0", mat::is_zero(r, eta_at(G.identity())));
    for (const auto& [g, a] : fs.alpha) {
        const auto& e = eta_at(g);
        const auto p = a.unit();
        const auto dp = d(r, p);
        rep.add("eta:absorbs_alpha(1)", mat::mul(r, e, p) == e, G.name(g));
        rep.add("sanity:p d(p) p=0", mat::is_zero(r, mat::mul(r, mat::mul(r, p, dp), p)), G.name(g));
        for (const auto& x : elems) {
            auto ax = fs.alpha_of(g, x);
            auto lhs = mat::sub(r, d(r, ax), fs.alpha_of(g, d(r, x)));
            auto rhs = mat::add(r, mat::commutator(r, e, ax), mat::mul(r, ax, dp));
            bool ok = lhs == rhs;
            std::string detail = G.name(g) + " r=" + r.show(x);
            if (!ok)
                detail += " d(alpha(r))=" + mat::show(r, d(r, ax)) +
                          " alpha(d(r))=" + mat::show(r, fs.alpha_of(g, d(r, x)));
            rep.add("cond1", ok, detail);
        }
    }
    for (auto [g, h] : fs.pairs()) {
        if (!fs.has_pair(g, h)) continue;
        const int gh = *G.mul(g, h);
        const auto& w = fs.w(g, h);
        const auto p = fs.alpha_one(g);
        const auto pdp = mat::kron_right(r, mat::mul(r, p, d(r, p)), mat::identity(r, fs.n(h)));
        rep.add("sanity:p d(p) omega=0", mat::is_zero(r, mat::mul(r, pdp, w)),
                "(" + G.name(g) + "," + G.name(h) + ")");
        auto rhs = mat::mul(r, mat::kron_right(r, eta_at(g), mat::identity(r, fs.n(h))), w);
        rhs = mat::add(r, rhs, mat::mul(r, fs.alpha_of(g, eta_at(h)), w));
        rhs = mat::add(r, rhs, mat::mul(r, w, mat::sub(r, d(r, fs.alpha_one(gh)), eta_at(gh))));
        rep.add("cond2", d(r, w) == rhs, "(" + G.name(g) + "," + G.name(h) + ")");
    }
    return rep;
}

// Specialization for n = 1 with unital alpha_g (classical crossed products).
template <Ring R>
Report crossed_lift_conditions(const FactorSystem<R>& fs, const Derivation<R>& d, const EtaFamily<R>& eta,
                               const std::vector<typename R::Element>& samples = {}) {
    for (const auto& [g, a] : fs.alpha)
        if (a.size() != 1 || !(a.unit() == mat::identity(fs.ring, 1)))
            throw InputError("NotCrossed", "degree " + fs.group.name(g) + " is not rank one with unital alpha");
    return check_lift_conditions(fs, d, eta, samples);
}

// Skew case: eta(gh) = eta(g) + alpha_g(eta(h)).
template <Ring R>
Report crossed_hom_law(const FactorSystem<R>& fs, const EtaFamily<R>& eta) {
    Report rep;
    for (auto [g, h] : fs.pairs()) {
        int gh = *fs.group.mul(g, h);
        auto rhs = mat::add(fs.ring, eta.at(g), fs.alpha_of(g, eta.at(h)));
        rep.add("crossed_hom", eta.at(gh) == rhs, "(" + fs.group.name(g) + "," + fs.group.name(h) + ")");
    }
    return rep;
}

// Is alpha_g^-1 delta alpha_g - delta inner? Without a witness the answer is
// "undetermined" unless the map vanishes on the test elements. With a witness a
// the check is delta(alpha_g(r)) - alpha_g(delta(r)) = [alpha_g(a), alpha_g(r)].
struct InnernessVerdict {
    std::string status;  // "inner", "witness_rejected" or "undetermined"
    Report report;
};

template <Ring R>
InnernessVerdict primary_obstruction(const FactorSystem<R>& fs, const Derivation<R>& d, int g,
                                     const std::optional<typename R::Element>& witness,
                                     const std::vector<typename R::Element>& samples = {}) {
    const auto& r = fs.ring;
    if (fs.n(g) != 1) throw InputError("NotCrossed", "degree " + fs.group.name(g) + " has rank " + std::to_string(fs.n(g)));
    auto alpha = [&](const typename R::Element& x) { return fs.alpha_of(g, mat::scalar1(r, x))(0, 0); };
    auto elems = fs.test_elements();
    elems.insert(elems.end(), samples.begin(), samples.end());
    InnernessVerdict v;
    bool vanishes = true;
    for (const auto& x : elems) {
        auto ax = alpha(x);
        auto defect = sub(r, d(r, ax), alpha(d(r, x)));
        vanishes = vanishes && r.is_zero(defect);
        if (witness) v.report.add("inner_witness", defect == commutator(r, alpha(*witness), ax), "r=" + r.show(x));
    }
    if (vanishes)
        v.status = "inner";
    else if (witness)
        v.status = v.report.ok() ? "inner" : "witness_rejected";
    else
        v.status = "undetermined";
    return v;
}

// ---------------------------------------------------------------- covariant derivative on rows

// (delta(u) + u eta(g)) alpha_g(1)
template <Ring R>
Mat<typename R::Element> covariant_row(const FactorSystem<R>& fs, const Derivation<R>& d, const EtaFamily<R>& eta,
                                       int g, const Mat<typename R::Element>& u) {
    const auto& r = fs.ring;
    return mat::mul(r, mat::add(r, d(r, u), mat::mul(r, u, eta.at(g))), fs.alpha_one(g));
}

// Two-sided Leibniz rule and recovery of eta from the connection.
template <Ring R>
Report covariant_checks(const FactorSystem<R>& fs, const Derivation<R>& d, const EtaFamily<R>& eta, int g,
                        const std::vector<Mat<typename R::Element>>& rows,
                        const std::vector<typename R::Element>& samples) {
    const auto& r = fs.ring;
    Report rep;
    const auto p = fs.alpha_one(g);
    auto canon = [&](const Mat<typename R::Element>& u) { return mat::mul(r, u, p); };
    for (const auto& u : rows)
        for (const auto& a : samples)
            for (const auto& b : samples) {
                auto s = mat::mul(r, mat::lmul(r, a, u), fs.alpha_of(g, b));  // a s b
                auto lhs = covariant_row(fs, d, eta, g, s);
                auto t1 = mat::mul(r, mat::lmul(r, d(r, a), u), fs.alpha_of(g, b));
                auto t2 = mat::mul(r, mat::lmul(r, a, covariant_row(fs, d, eta, g, u)), fs.alpha_of(g, b));
                auto t3 = mat::mul(r, mat::lmul(r, a, u), fs.alpha_of(g, d(r, b)));
                rep.add("connection:two_sided_leibniz", canon(lhs) == canon(mat::add(r, mat::add(r, t1, t2), t3)),
                        fs.group.name(g));
            }
    const std::size_t n = fs.n(g);
    auto rec = mat::zeros(r, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        auto row = covariant_row(fs, d, eta, g, mat::mul(r, mat::unit_row(r, n, i), p));
        for (std::size_t j = 0; j < n; ++j) rec(i, j) = row(0, j);
    }
    rep.add("connection:eta_recovered", rec == eta.at(g), fs.group.name(g));
    return rep;
}

// ---------------------------------------------------------------- lifts in an ambient graded ring

template <GradedRing S>
struct GradedDerivation {
    std::function<typename S::Element(const typename S::Element&)> fn;
    typename S::Element operator()(const typename S::Element& x) const { return fn(x); }
};

template <GradedRing S>
GradedDerivation<S> graded_from_rule(std::function<typename S::Element(const typename S::Element&)> f) {
    return {std::move(f)};
}

// s -> sum over homogeneous parts of (delta(u) + u eta(g)) x_g with u = s y_g^t.
template <GradedRing S>
typename S::Element lift_apply(const S& s, const FrameSystem<S>& fr, const Derivation<typename S::Base>& d,
                               const EtaFamily<typename S::Base>& eta, const typename S::Element& x) {
    const auto& R = s.base();
    auto out = s.zero();
    for (const auto& [g, part] : s.homogeneous_parts(x)) {
        const auto& f = fr.at(g);
        auto u = hom_decompose(s, f, part);
        auto row = mat::add(R, d(R, u), mat::mul(R, u, eta.at(g)));
        out = s.add(out, compose(s, f, row));
    }
    return out;
}

// Refuses (MathError "ConditionsNotVerified") unless both lifting
// conditions hold on the supplied samples.
template <GradedRing S>
GradedDerivation<S> build_lift(const S& s, const FrameSystem<S>& fr, const FactorSystem<typename S::Base>& fs,
                               const Derivation<typename S::Base>& d, const EtaFamily<typename S::Base>& eta,
                               const std::vector<typename S::Base::Element>& samples = {}) {
    check_lift_conditions(fs, d, eta, samples).require("ConditionsNotVerified");
    auto eta_c = canonical_eta(fs, eta);
    return {[s, fr, d, eta_c](const typename S::Element& x) { return lift_apply(s, fr, d, eta_c, x); }};
}

// Same construction without the condition check, for exhibiting failures.
template <GradedRing S>
GradedDerivation<S> unchecked_lift(const S& s, const FrameSystem<S>& fr, const Derivation<typename S::Base>& d,
                                   const EtaFamily<typename S::Base>& eta) {
    return {[s, fr, d, eta](const typename S::Element& x) { return lift_apply(s, fr, d, eta, x); }};
}

// eta(g) = D(x_g) y_g^t; throws NotGraded when D moves x_g out of degree g.
template <GradedRing S>
EtaFamily<typename S::Base> eta_from_lift(const S& s, const FrameSystem<S>& fr, const GradedDerivation<S>& D) {
    EtaFamily<typename S::Base> eta;
    for (const auto& [g, f] : fr.cols) {
        Mat<typename S::Element> dx = f.x;
        for (auto& e : dx.a) {
            e = D(e);
            if (!homogeneous_of(s, e, g)) throw MathError("NotGraded", "D(x_g) leaves degree " + fr.group.name(g));
        }
        auto m = mat::mul(s, dx, mat::transpose(f.y));
        eta.emplace(g, mat::map(m, [&](const typename S::Element& e) { return s.to_base(e); }));
    }
    return eta;
}

template <GradedRing S>
Report leibniz_report(const S& s, const GradedDerivation<S>& D,
                      const std::vector<std::pair<typename S::Element, typename S::Element>>& pairs) {
    Report rep;
    for (const auto& [a, b] : pairs) {
        auto lhs = D(s.mul(a, b));
        auto rhs = s.add(s.mul(D(a), b), s.mul(a, D(b)));
        rep.add("lift:leibniz", lhs == rhs, s.show(a) + " * " + s.show(b));
    }
    return rep;
}

// Restriction to degree 0 agrees with delta; degrees are preserved.
template <GradedRing S>
Report lift_restriction_report(const S& s, const GradedDerivation<S>& D, const Derivation<typename S::Base>& d,
                               const std::vector<typename S::Base::Element>& base_samples,
                               const std::vector<std::pair<int, typename S::Element>>& homogeneous) {
    Report rep;
    for (const auto& x : base_samples)
        rep.add("lift:restricts", D(s.from_base(x)) == s.from_base(d(s.base(), x)), s.base().show(x));
    for (const auto& [g, x] : homogeneous) rep.add("lift:graded", homogeneous_of(s, D(x), g), s.show(x));
    return rep;
}

// ---------------------------------------------------------------- Z-graded lift from one generator

// Covariant derivatives on every degree of an integer window, built from
// nabla_1 = (delta(u) + u eta_1) x_1 by duality and tensor splitting.
template <GradedRing S>
class ZConnection {
public:
    using E = typename S::Element;
    using R = typename S::Base;

    ZConnection(S s, FrameSystem<S> fr, Derivation<R> d, Mat<typename R::Element> eta1)
        : s_(std::move(s)), fr_(std::move(fr)), d_(std::move(d)), eta1_(std::move(eta1)) {}

    E nabla(int m, const E& x) const {
        const auto& R0 = s_.base();
        if (m == 0) return s_.from_base(d_(R0, s_.to_base(x)));
        if (m == 1) {
            const auto& f = fr_.at(1);
            auto u = hom_decompose(s_, f, x);
            return compose(s_, f, mat::add(R0, d_(R0, u), mat::mul(R0, u, eta1_)));
        }
        if (m == -1) {
            // nu^-1 of the dual connection applied to nu(x)
            const auto& f = fr_.at(-1);
            auto out = s_.zero();
            for (std::size_t i = 0; i < f.size(); ++i) {
                const auto& yi = f.y(i, 0);  // degree 1
                auto val = s_.add(s_.from_base(d_(R0, s_.to_base(s_.mul(x, yi)))), s_.neg(s_.mul(x, nabla(1, yi))));
                out = s_.add(out, s_.mul(val, f.x(i, 0)));
            }
            return out;
        }
        // x = sum_i y_i (x_i x) with y_i of degree sign(m)
        const int step = m > 0 ? -1 : 1;
        const auto& f = fr_.at(step);
        auto out = s_.zero();
        for (std::size_t i = 0; i < f.size(); ++i) {
            const auto& yi = f.y(i, 0);
            auto rest = s_.mul(f.x(i, 0), x);
            out = s_.add(out, s_.mul(nabla(-step, yi), rest));
            out = s_.add(out, s_.mul(yi, nabla(m + step, rest)));
        }
        return out;
    }

    // eta(k) = nabla_k(x_k) y_k^t on the whole window.
    EtaFamily<R> eta() const {
        EtaFamily<R> out;
        for (const auto& [k, f] : fr_.cols) {
            Mat<E> nx = f.x;
            for (auto& e : nx.a) e = nabla(k, e);
            auto m = mat::mul(s_, nx, mat::transpose(f.y));
            out.emplace(k, mat::map(m, [&](const E& e) { return s_.to_base(e); }));
        }
        return out;
    }

    // nu(t)(s) = t s; nu^-1(f) = sum_i f(y_{-1,i}) x_{-1,i}.
    E nu_inverse(const std::function<E(const E&)>& f) const {
        const auto& fm = fr_.at(-1);
        auto out = s_.zero();
        for (std::size_t i = 0; i < fm.size(); ++i) out = s_.add(out, s_.mul(f(fm.y(i, 0)), fm.x(i, 0)));
        return out;
    }

private:
    S s_;
    FrameSystem<S> fr_;
    Derivation<R> d_;
    Mat<typename R::Element> eta1_;
};

// Generator condition at degree 1 (MathError "GeneratorConditionFails"),
// then the eta family of the constructed connection.
template <GradedRing S>
EtaFamily<typename S::Base> z_lift_eta(const S& s, const FrameSystem<S>& fr, const FactorSystem<typename S::Base>& fs,
                                       const Derivation<typename S::Base>& d,
                                       const Mat<typename S::Base::Element>& eta1,
                                       const std::vector<typename S::Base::Element>& samples) {
    if (!fr.group.is_window()) throw InputError("NotIntegerWindow", "z-lift needs an integer window");
    const auto& r = fs.ring;
    const auto p = fs.alpha_one(1);
    const auto dp = d(r, p);
    auto elems = fs.test_elements();
    elems.insert(elems.end(), samples.begin(), samples.end());
    for (const auto& x : elems) {
        auto ax = fs.alpha_of(1, x);
        auto lhs = mat::sub(r, d(r, ax), fs.alpha_of(1, d(r, x)));
        auto rhs = mat::add(r, mat::commutator(r, eta1, ax), mat::mul(r, ax, dp));
        if (!(lhs == rhs)) throw MathError("GeneratorConditionFails", "r = " + r.show(x));
    }
    ZConnection<S> conn(s, fr, d, mat::mul(r, eta1, p));
    return canonical_eta(fs, conn.eta());
}

// ---------------------------------------------------------------- involutive case

// Conditions in symmetric form for Parseval frames, plus star preservation
// of the lift on the supplied homogeneous samples.
template <GradedRing S>
Report star_lift_check(const S& s, const FrameSystem<S>& fr, const FactorSystem<typename S::Base>& fs,
                       const Derivation<typename S::Base>& d, const EtaFamily<typename S::Base>& eta,
                       const std::vector<typename S::Base::Element>& samples,
                       const std::vector<typename S::Element>& homogeneous) {
    const auto& r = fs.ring;
    Report rep;
    for (const auto& [g, f] : fr.cols) require_parseval(s, f);
    for (const auto& [g, a] : fs.alpha) {
        const auto& e = eta.at(g);
        auto ed = mat::dagger(r, e);
        for (const auto& x : samples) {
            auto ax = fs.alpha_of(g, x);
            auto rhs = mat::add(r, mat::add(r, mat::mul(r, e, ax), fs.alpha_of(g, d(r, x))), mat::mul(r, ax, ed));
            rep.add("star_cond1", d(r, ax) == rhs, fs.group.name(g) + " r=" + r.show(x));
        }
    }
    for (auto [g, h] : fs.pairs()) {
        if (!fs.has_pair(g, h)) continue;
        int gh = *fs.group.mul(g, h);
        const auto& w = fs.w(g, h);
        auto rhs = mat::mul(r, mat::kron_right(r, eta.at(g), mat::identity(r, fs.n(h))), w);
        rhs = mat::add(r, rhs, mat::mul(r, fs.alpha_of(g, eta.at(h)), w));
        rhs = mat::add(r, rhs, mat::mul(r, w, mat::dagger(r, eta.at(gh))));
        rep.add("star_cond2", d(r, w) == rhs, "(" + fs.group.name(g) + "," + fs.group.name(h) + ")");
    }
    if (!rep.ok()) return rep;
    auto D = unchecked_lift(s, fr, d, eta);
    for (const auto& x : homogeneous) rep.add("star_preserved", D(s.star(x)) == s.star(D(x)), s.show(x));
    return rep;
}

}  // namespace sgr
