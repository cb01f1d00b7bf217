#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sgr/frames.hpp"
#include "sgr/report.hpp"

namespace sgr {

// alpha_g : R -> M_{n_g}(R), either as a closure r -> x_g r y_g^t or as a
// table of generator images extended multiplicatively.
template <Ring R>
class AlphaMap {
public:
    using E = typename R::Element;
    using MatE = Mat<E>;

    static AlphaMap closure(std::function<MatE(const E&)> f, MatE unit) {
        AlphaMap a;
        a.fn_ = std::move(f);
        a.unit_ = std::move(unit);
        return a;
    }
    static AlphaMap table(std::vector<MatE> images, MatE unit) {
        AlphaMap a;
        a.images_ = std::move(images);
        a.unit_ = std::move(unit);
        return a;
    }

    std::size_t size() const { return unit_.rows; }
    const MatE& unit() const { return unit_; }
    bool has_table() const { return images_.has_value(); }
    const std::vector<MatE>& images() const { return *images_; }

    MatE eval_combo(const R& r, const Combo& combo) const {
        auto acc = mat::zeros(r, size(), size());
        for (const auto& t : combo) {
            MatE w = unit_;
            for (int g : t.word) w = mat::mul(r, w, images_->at(static_cast<std::size_t>(g)));
            acc = mat::add(r, acc, mat::scale(r, t.c, w));
        }
        return acc;
    }

    MatE operator()(const R& r, const E& x) const {
        if (fn_) return fn_(x);
        return eval_combo(r, r.words(x));
    }

private:
    std::function<MatE(const E&)> fn_;
    std::optional<std::vector<MatE>> images_;
    MatE unit_;
};

using Pair = std::pair<int, int>;

template <Ring R>
struct FactorSystem {
    using E = typename R::Element;
    using MatE = Mat<E>;

    GroupModel group = GroupModel::integer_window(1);
    R ring;
    std::map<int, AlphaMap<R>> alpha;
    std::map<Pair, MatE> omega;
    std::map<Pair, MatE> omega_tilde;
    std::vector<E> samples;  // elements of R used for r-dependent checks

    explicit FactorSystem(R r) : ring(std::move(r)) {}

    std::size_t n(int g) const { return at_alpha(g).size(); }
    const AlphaMap<R>& at_alpha(int g) const {
        auto it = alpha.find(g);
        if (it == alpha.end()) throw OutOfWindow("no alpha for " + group.name(g));
        return it->second;
    }
    const MatE& w(int g, int h) const { return lookup(omega, g, h, "omega"); }
    const MatE& wt(int g, int h) const { return lookup(omega_tilde, g, h, "omega~"); }
    bool has_pair(int g, int h) const { return omega.count({g, h}) > 0; }

    MatE alpha_of(int g, const E& r) const { return at_alpha(g)(ring, r); }
    MatE alpha_one(int g) const { return at_alpha(g).unit(); }

    // Entrywise: block (i,j) of the result is alpha_g(a_ij).
    MatE alpha_of(int g, const MatE& a) const {
        const std::size_t k = n(g);
        auto out = mat::zeros(ring, a.rows * k, a.cols * k);
        for (std::size_t i = 0; i < a.rows; ++i)
            for (std::size_t j = 0; j < a.cols; ++j) {
                if (ring.is_zero(a(i, j))) continue;
                auto b = alpha_of(g, a(i, j));
                for (std::size_t p = 0; p < k; ++p)
                    for (std::size_t q = 0; q < k; ++q) out(i * k + p, j * k + q) = b(p, q);
            }
        return out;
    }

    // Elements checked for r-dependent identities: samples plus, for
    // table-form alpha, the ring generators.
    std::vector<E> test_elements() const {
        std::vector<E> out = samples;
        bool table = !alpha.empty() && alpha.begin()->second.has_table();
        if (table)
            for (auto& g : ring.generators()) out.push_back(std::move(g));
        return out;
    }

    // Pairs (g,h) whose product is in the model, in canonical order.
    std::vector<Pair> pairs() const {
        std::vector<Pair> out;
        for (int g : group.elements())
            for (int h : group.elements())
                if (group.mul(g, h)) out.emplace_back(g, h);
        return out;
    }

private:
    const MatE& lookup(const std::map<Pair, MatE>& m, int g, int h, const char* what) const {
        auto it = m.find({g, h});
        if (it == m.end())
            throw OutOfWindow(std::string(what) + "(" + group.name(g) + "," + group.name(h) + ") not available");
        return it->second;
    }
};

// The product s_g * s_h = s_g alpha_g(s_h) omega(g,h) on coefficient rows.
template <Ring R>
Mat<typename R::Element> fs_product(const FactorSystem<R>& fs, int g, const Mat<typename R::Element>& s, int h,
                                    const Mat<typename R::Element>& t) {
    const int gh = fs.group.mul_or_throw(g, h);
    (void)gh;
    return mat::mul(fs.ring, mat::mul(fs.ring, s, fs.alpha_of(g, t)), fs.w(g, h));
}

// ---------------------------------------------------------------- extraction

template <GradedRing S>
FactorSystem<typename S::Base> extract_factor_system(const S& s, const FrameSystem<S>& fr) {
    using R = typename S::Base;
    using RE = typename R::Element;
    check_frames(s, fr);
    FactorSystem<R> fs(s.base());
    fs.group = fr.group;
    for (const auto& [g, col] : fr.cols) {
        auto yt = mat::transpose(col.y);
        auto closure = [s, x = col.x, yt](const RE& r) {
            auto m = mat::mul(s, mat::rmul(s, x, s.from_base(r)), yt);
            return mat::map(m, [&](const typename S::Element& e) { return s.to_base(e); });
        };
        auto unit = closure(s.base().one());
        fs.alpha.emplace(g, AlphaMap<R>::closure(closure, unit));
    }
    auto to_base = [&](const Mat<typename S::Element>& m) {
        return mat::map(m, [&](const typename S::Element& e) { return s.to_base(e); });
    };
    for (int g : fr.group.elements())
        for (int h : fr.group.elements()) {
            auto gh = fr.group.mul(g, h);
            if (!gh || !fr.cols.count(g) || !fr.cols.count(h) || !fr.cols.count(*gh)) continue;
            const auto &fg = fr.at(g), &fh = fr.at(h), &fgh = fr.at(*gh);
            fs.omega.emplace(Pair{g, h}, to_base(mat::mul(s, mat::kron_right(s, fg.x, fh.x), mat::transpose(fgh.y))));
            fs.omega_tilde.emplace(Pair{g, h},
                                   to_base(mat::mul(s, fgh.x, mat::transpose(mat::kron_left(s, fh.y, fg.y)))));
        }
    return fs;
}

// ---------------------------------------------------------------- axioms

template <Ring R>
Report verify_axioms(const FactorSystem<R>& fs, const std::vector<typename R::Element>& extra_samples = {}) {
    const auto& r = fs.ring;
    const auto& G = fs.group;
    Report rep;
    auto samples = fs.test_elements();
    samples.insert(samples.end(), extra_samples.begin(), extra_samples.end());
    const int e = G.identity();
    auto name = [&](int g) { return G.name(g); };

    // shapes
    for (const auto& [gh, w] : fs.omega) {
        auto [g, h] = gh;
        int p = G.mul_or_throw(g, h);
        bool ok = w.rows == fs.n(g) * fs.n(h) && w.cols == fs.n(p) && fs.wt(g, h).rows == fs.n(p) &&
                  fs.wt(g, h).cols == fs.n(g) * fs.n(h);
        if (!ok) rep.add("shape", false, "omega(" + name(g) + "," + name(h) + ") has wrong dimensions");
    }
    if (!rep.ok()) return rep;

    // normalization
    rep.add("norm:n_e=1", fs.n(e) == 1);
    bool id_ok = true;
    for (const auto& x : samples) id_ok = id_ok && fs.alpha_of(e, x) == mat::scalar1(r, x);
    rep.add("norm:alpha_e=id", id_ok);
    rep.add("norm:omega(e,e)=1", fs.w(e, e) == mat::identity(r, 1));
    for (int g : G.elements()) {
        if (!fs.alpha.count(g)) continue;
        auto a1 = fs.alpha_one(g);
        rep.add("norm:alpha_g(1)^2=alpha_g(1)", mat::mul(r, a1, a1) == a1, name(g));
        if (fs.has_pair(g, e)) rep.add("norm:omega(g,e)=alpha_g(1)", fs.w(g, e) == a1, name(g));
        if (fs.has_pair(e, g)) rep.add("norm:omega(e,g)=alpha_g(1)", fs.w(e, g) == a1, name(g));
        // homomorphism on sample pairs
        bool hom = true;
        std::string wit;
        for (std::size_t i = 0; i < samples.size() && hom; ++i)
            for (std::size_t j = 0; j < samples.size() && hom; j += 3) {
                auto lhs = fs.alpha_of(g, r.mul(samples[i], samples[j]));
                auto rhs = mat::mul(r, fs.alpha_of(g, samples[i]), fs.alpha_of(g, samples[j]));
                if (!(lhs == rhs)) {
                    hom = false;
                    wit = r.show(samples[i]) + " * " + r.show(samples[j]);
                }
            }
        rep.add("alpha_hom", hom, name(g) + (hom ? "" : ": " + wit));
        if (fs.at_alpha(g).has_table()) {
            bool rel_ok = true;
            std::string rw;
            for (const auto& rel : r.relations()) {
                if (!(fs.at_alpha(g).eval_combo(r, rel.lhs) == fs.at_alpha(g).eval_combo(r, rel.rhs))) {
                    rel_ok = false;
                    rw = r.show(eval_combo(r, rel.lhs));
                }
            }
            rep.add("alpha_relations", rel_ok, name(g) + (rel_ok ? "" : ": relation with lhs " + rw));
        }
    }

    for (auto [g, h] : fs.pairs()) {
        if (!fs.has_pair(g, h)) continue;
        int gh = *G.mul(g, h);
        const auto& w = fs.w(g, h);
        const auto& wt = fs.wt(g, h);
        std::string at = "(" + name(g) + "," + name(h) + ")";
        rep.add("paruni:wt*w=alpha_gh(1)", mat::mul(r, wt, w) == fs.alpha_one(gh), at);
        rep.add("paruni:w*wt=alpha_g(alpha_h(1))", mat::mul(r, w, wt) == fs.alpha_of(g, fs.alpha_one(h)), at);
        bool co = true;
        std::string wit;
        for (const auto& x : samples) {
            auto lhs = mat::mul(r, w, fs.alpha_of(gh, x));
            auto rhs = mat::mul(r, fs.alpha_of(g, fs.alpha_of(h, x)), w);
            if (!(lhs == rhs)) {
                co = false;
                wit = " r=" + r.show(x);
                break;
            }
        }
        rep.add("coaction", co, at + wit);
        for (int k : G.elements()) {
            auto hk = G.mul(h, k);
            auto ghk = G.mul(gh, k);
            if (!hk || !ghk || !fs.has_pair(gh, k) || !fs.has_pair(h, k) || !fs.has_pair(g, *hk)) continue;
            auto lhs = mat::mul(r, mat::kron_right(r, w, mat::identity(r, fs.n(k))), fs.w(gh, k));
            auto rhs = mat::mul(r, fs.alpha_of(g, fs.w(h, k)), fs.w(g, *hk));
            rep.add("cocycle", lhs == rhs, "(" + name(g) + "," + name(h) + "," + name(k) + ")");
        }
    }
    return rep;
}

// alpha_g(r^*) = alpha_g(r)^dagger and omega~ = omega^dagger.
template <Ring R>
Report star_compatibility(const FactorSystem<R>& fs) {
    const auto& r = fs.ring;
    Report rep;
    for (const auto& [g, a] : fs.alpha)
        for (const auto& x : fs.test_elements())
            rep.add("star:alpha", fs.alpha_of(g, r.star(x)) == mat::dagger(r, fs.alpha_of(g, x)),
                    fs.group.name(g) + " r=" + r.show(x));
    for (const auto& [p, w] : fs.omega)
        rep.add("star:omega~=omega^dagger", fs.wt(p.first, p.second) == mat::dagger(r, w),
                "(" + fs.group.name(p.first) + "," + fs.group.name(p.second) + ")");
    return rep;
}

// ---------------------------------------------------------------- conjugacy

template <Ring R>
struct Witness {
    std::map<int, Mat<typename R::Element>> v;  // v_g : n'_g x n_g
    std::map<int, Mat<typename R::Element>> w;  // w_g : n_g x n'_g
};

// Checks (v1)-(v3) for fsA (n, alpha, omega) against fsB (n', alpha', omega').
template <Ring R>
Report verify_conjugacy(const FactorSystem<R>& A, const FactorSystem<R>& B, const Witness<R>& wit) {
    const auto& r = A.ring;
    Report rep;
    for (int g : A.group.elements()) {
        if (!A.alpha.count(g)) continue;
        std::string at = A.group.name(g);
        const auto& v = wit.v.at(g);
        const auto& w = wit.w.at(g);
        rep.add("v1:v*w=alpha'_g(1)", mat::mul(r, v, w) == B.alpha_one(g), at);
        rep.add("v1:w*v=alpha_g(1)", mat::mul(r, w, v) == A.alpha_one(g), at);
        bool ok = true;
        std::string bad;
        for (const auto& x : A.test_elements())
            if (!(mat::mul(r, B.alpha_of(g, x), v) == mat::mul(r, v, A.alpha_of(g, x)))) {
                ok = false;
                bad = " r=" + r.show(x);
                break;
            }
        rep.add("v2:alpha'(r)v=v alpha(r)", ok, at + bad);
    }
    for (auto [g, h] : A.pairs()) {
        if (!A.has_pair(g, h) || !B.has_pair(g, h)) continue;
        int gh = *A.group.mul(g, h);
        auto lhs = mat::mul(r, B.w(g, h), wit.v.at(gh));
        auto rhs = mat::mul(r, mat::mul(r, mat::kron_right(r, wit.v.at(g), mat::identity(r, B.n(h))),
                                        A.alpha_of(g, wit.v.at(h))),
                            A.w(g, h));
        rep.add("v3", lhs == rhs, "(" + A.group.name(g) + "," + A.group.name(h) + ")");
    }
    return rep;
}

// Conjugate system alpha'_g = v_g alpha_g(.) w_g with the matching omega, omega~.
template <Ring R>
FactorSystem<R> conjugacy_transform(const FactorSystem<R>& A, const Witness<R>& wit) {
    using E = typename R::Element;
    const auto& r = A.ring;
    for (const auto& [g, a] : A.alpha) {
        if (!(mat::mul(r, wit.w.at(g), wit.v.at(g)) == a.unit()))
            throw MathError("WitnessRejected", "w_g v_g != alpha_g(1) at " + A.group.name(g));
    }
    FactorSystem<R> B(A.ring);
    B.group = A.group;
    B.samples = A.samples;
    for (const auto& [g, a] : A.alpha) {
        auto v = wit.v.at(g), w = wit.w.at(g);
        auto f = [a = a, v, w, r](const E& x) { return mat::mul(r, mat::mul(r, v, a(r, x)), w); };
        B.alpha.emplace(g, AlphaMap<R>::closure(f, mat::mul(r, v, w)));
    }
    for (const auto& [p, om] : A.omega) {
        auto [g, h] = p;
        int gh = *A.group.mul(g, h);
        const auto &vg = wit.v.at(g), &wg = wit.w.at(g);
        const std::size_t nh2 = wit.v.at(h).rows;
        auto vv = mat::mul(r, mat::kron_right(r, vg, mat::identity(r, nh2)), A.alpha_of(g, wit.v.at(h)));
        B.omega.emplace(p, mat::mul(r, mat::mul(r, vv, om), wit.w.at(gh)));
        auto ww = mat::mul(r, A.alpha_of(g, wit.w.at(h)), mat::kron_right(r, wg, mat::identity(r, nh2)));
        B.omega_tilde.emplace(p, mat::mul(r, mat::mul(r, wit.v.at(gh), A.wt(g, h)), ww));
    }
    return B;
}

// v_g = x'_g y_g^t and w_g = x_g y'_g^t for two frame systems of one ring.
template <GradedRing S>
Witness<typename S::Base> witness_from_frames(const S& s, const FrameSystem<S>& fa, const FrameSystem<S>& fb) {
    Witness<typename S::Base> wit;
    auto to_base = [&](const Mat<typename S::Element>& m) {
        return mat::map(m, [&](const typename S::Element& e) { return s.to_base(e); });
    };
    for (const auto& [g, ca] : fa.cols) {
        const auto& cb = fb.at(g);
        wit.v.emplace(g, to_base(mat::mul(s, cb.x, mat::transpose(ca.y))));
        wit.w.emplace(g, to_base(mat::mul(s, ca.x, mat::transpose(cb.y))));
    }
    return wit;
}

// ---------------------------------------------------------------- graded views

template <Ring R>
struct GradedView {
    int degree = 0;
    Mat<typename R::Element> row;  // 1 x n_g, canonical: row * alpha_g(1) = row
};

template <Ring R>
GradedView<R> canonical_view(const FactorSystem<R>& fs, int g, const Mat<typename R::Element>& u) {
    return {g, mat::mul(fs.ring, u, fs.alpha_one(g))};
}

// phi_g(u^t x'_g) = u^t v_g x_g, from views of B to views of A; the inverse
// direction uses w_g.
template <Ring R>
GradedView<R> graded_iso_apply(const FactorSystem<R>& A, const Witness<R>& wit, const GradedView<R>& b) {
    return canonical_view(A, b.degree, mat::mul(A.ring, b.row, wit.v.at(b.degree)));
}

template <Ring R>
GradedView<R> graded_iso_inverse(const FactorSystem<R>& B, const Witness<R>& wit, const GradedView<R>& a) {
    return canonical_view(B, a.degree, mat::mul(B.ring, a.row, wit.w.at(a.degree)));
}

template <Ring R>
GradedView<R> view_product(const FactorSystem<R>& fs, const GradedView<R>& a, const GradedView<R>& b) {
    int gh = fs.group.mul_or_throw(a.degree, b.degree);
    return {gh, fs_product(fs, a.degree, a.row, b.degree, b.row)};
}

// phi(a b) = phi(a) phi(b) on all pairs of the supplied B-views.
template <Ring R>
Report graded_iso_multiplicativity(const FactorSystem<R>& A, const FactorSystem<R>& B, const Witness<R>& wit,
                                   const std::vector<GradedView<R>>& views) {
    Report rep;
    for (const auto& a : views)
        for (const auto& b : views) {
            if (!B.group.mul(a.degree, b.degree)) continue;
            auto lhs = graded_iso_apply(A, wit, view_product(B, a, b));
            auto rhs = view_product(A, graded_iso_apply(A, wit, a), graded_iso_apply(A, wit, b));
            rep.add("iso:multiplicative", lhs.row == rhs.row,
                    "(" + B.group.name(a.degree) + "," + B.group.name(b.degree) + ")");
        }
    return rep;
}

// ---------------------------------------------------------------- decomposition

// u = s y_g^t with u^t x_g = s checked.
template <GradedRing S>
Mat<typename S::Base::Element> hom_decompose(const S& s, const FrameColumn<S>& f, const typename S::Element& x) {
    const auto& R = s.base();
    Mat<typename S::Base::Element> u(1, f.size(), R.zero());
    auto back = s.zero();
    for (std::size_t i = 0; i < f.size(); ++i) {
        auto prod = s.mul(x, f.y(i, 0));
        try {
            u(0, i) = s.to_base(prod);
        } catch (const MathError&) {
            throw MathError("DecompositionMismatch", "s y_g^t is not in the principal component");
        }
        back = s.add(back, s.mul(s.from_base(u(0, i)), f.x(i, 0)));
    }
    if (!(back == x)) throw MathError("DecompositionMismatch", "u^t x_g != s for s = " + s.show(x));
    return u;
}

// u^t x_g in the ambient ring.
template <GradedRing S>
typename S::Element compose(const S& s, const FrameColumn<S>& f, const Mat<typename S::Base::Element>& u) {
    auto out = s.zero();
    for (std::size_t i = 0; i < f.size(); ++i) out = s.add(out, s.mul(s.from_base(u(0, i)), f.x(i, 0)));
    return out;
}

}  // namespace sgr
