#pragma once

#include <memory>
#include <sstream>

#include "sgr/facsys.hpp"

namespace sgr {

// The graded ring built from a verified factor system: the degree g
// component is M_{1,n_g}(R) alpha_g(1), with product s alpha_g(t) omega(g,h).
template <Ring R>
class ReconstructedRing {
public:
    using RE = typename R::Element;
    using Row = Mat<RE>;
    using Element = std::map<int, Row>;  // only nonzero canonical rows
    using Base = R;

    explicit ReconstructedRing(std::shared_ptr<const FactorSystem<R>> fs) : fs_(std::move(fs)) {}

    const FactorSystem<R>& system() const { return *fs_; }
    const GroupModel& group() const { return fs_->group; }

    Element zero() const { return {}; }
    Element one() const { return from_base(base().one()); }

    // u alpha_g(1) at degree g; zero rows are dropped.
    Element view(int g, const Row& u) const {
        Element out;
        put(out, g, u);
        return out;
    }

    Element add(const Element& a, const Element& b) const {
        Element out = a;
        for (const auto& [g, u] : b) {
            auto it = out.find(g);
            if (it == out.end()) {
                out.emplace(g, u);
                continue;
            }
            it->second = mat::add(base(), it->second, u);
            if (mat::is_zero(base(), it->second)) out.erase(it);
        }
        return out;
    }
    Element neg(const Element& a) const {
        Element out;
        for (const auto& [g, u] : a) out.emplace(g, mat::neg(base(), u));
        return out;
    }
    Element scale(const Scalar& c, const Element& a) const {
        Element out;
        for (const auto& [g, u] : a) put(out, g, mat::scale(base(), c, u));
        return out;
    }
    Element mul(const Element& a, const Element& b) const {
        Element out;
        for (const auto& [g, s] : a)
            for (const auto& [h, t] : b) {
                int gh = fs_->group.mul_or_throw(g, h);
                auto p = fs_product(*fs_, g, s, h, t);
                out = add(out, view(gh, p));
            }
        return out;
    }
    bool is_zero(const Element& a) const { return a.empty(); }
    bool has_star() const { return false; }
    Element star(const Element&) const {
        throw InputError("MissingInvolution", "reconstructed rings carry no involution");
    }

    // Base generators at the identity degree, then the canonical frame
    // entries e_i alpha_g(1) of every other degree.
    std::vector<Element> generators() const {
        std::vector<Element> out;
        for (const auto& r : base().generators()) out.push_back(from_base(r));
        for (auto [g, i] : frame_index()) out.push_back(view(g, mat::unit_row(base(), fs_->n(g), i)));
        return out;
    }
    std::vector<std::string> generator_names() const {
        std::vector<std::string> out = base().generator_names();
        for (auto [g, i] : frame_index()) out.push_back("x[" + group().name(g) + "," + std::to_string(i) + "]");
        return out;
    }
    std::vector<Relation> relations() const { return {}; }

    // sum_i u_i x_{g,i}, with u_i expanded in base generators.
    Combo words(const Element& a) const {
        Combo out;
        const int nb = static_cast<int>(base().generators().size());
        auto idx = frame_index();
        for (const auto& [g, u] : a)
            for (std::size_t i = 0; i < u.cols; ++i) {
                if (base().is_zero(u(0, i))) continue;
                int gi = -1;
                if (g != group().identity()) {
                    auto it = std::find(idx.begin(), idx.end(), std::pair<int, std::size_t>{g, i});
                    gi = nb + static_cast<int>(it - idx.begin());
                }
                for (auto t : base().words(u(0, i))) {
                    if (gi >= 0) t.word.push_back(gi);
                    out.push_back(std::move(t));
                }
            }
        return out;
    }
    std::map<std::string, Scalar> coords(const Element& a) const {
        std::map<std::string, Scalar> out;
        for (const auto& [g, u] : a)
            for (std::size_t i = 0; i < u.cols; ++i)
                for (const auto& [k, c] : base().coords(u(0, i)))
                    out[group().name(g) + "|" + std::to_string(i) + "|" + k] = c;
        return out;
    }
    std::string show(const Element& a) const {
        if (a.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [g, u] : a) {
            if (!first) os << " + ";
            first = false;
            os << "<" << group().name(g) << ">" << mat::show(base(), u);
        }
        return os.str();
    }

    const R& base() const { return fs_->ring; }
    std::map<int, Element> homogeneous_parts(const Element& a) const {
        std::map<int, Element> out;
        for (const auto& [g, u] : a) out.emplace(g, Element{{g, u}});
        return out;
    }
    RE to_base(const Element& a) const {
        const int e = group().identity();
        for (const auto& [g, u] : a)
            if (g != e) throw MathError("NotHomogeneous", "element has a component outside the identity degree");
        auto it = a.find(e);
        return it == a.end() ? base().zero() : it->second(0, 0);
    }
    Element from_base(const RE& r) const { return view(group().identity(), mat::scalar1(base(), r)); }

    friend bool operator==(const ReconstructedRing& a, const ReconstructedRing& b) { return a.fs_ == b.fs_; }

private:
    std::shared_ptr<const FactorSystem<R>> fs_;

    void put(Element& out, int g, const Row& u) const {
        auto c = mat::mul(base(), u, fs_->alpha_one(g));
        if (!mat::is_zero(base(), c)) out[g] = std::move(c);
        else out.erase(g);
    }

    std::vector<std::pair<int, std::size_t>> frame_index() const {
        std::vector<std::pair<int, std::size_t>> out;
        for (const auto& [g, a] : fs_->alpha) {
            if (g == group().identity()) continue;
            for (std::size_t i = 0; i < a.size(); ++i) out.emplace_back(g, i);
        }
        return out;
    }
};

// x_g from e_i alpha_g(1), y_g from column blocks of omega~(g^-1, g).
template <Ring R>
FrameSystem<ReconstructedRing<R>> canonical_frames(const ReconstructedRing<R>& S) {
    using Element = typename ReconstructedRing<R>::Element;
    const auto& fs = S.system();
    FrameSystem<ReconstructedRing<R>> fr;
    fr.group = S.group();
    for (const auto& [g, a] : fs.alpha) {
        const int gi = S.group().inv(g);
        if (!fs.alpha.count(gi) || !fs.has_pair(gi, g)) continue;
        const std::size_t n = fs.n(g), ni = fs.n(gi);
        FrameColumn<ReconstructedRing<R>> col;
        col.degree = g;
        col.x = Mat<Element>(n, 1, S.zero());
        col.y = Mat<Element>(n, 1, S.zero());
        const auto& wt = fs.wt(gi, g);
        for (std::size_t i = 0; i < n; ++i) {
            col.x(i, 0) = S.view(g, mat::unit_row(S.base(), n, i));
            col.y(i, 0) = S.view(gi, mat::block(wt, 0, i * ni, 1, ni));
        }
        fr.cols.emplace(g, std::move(col));
    }
    return fr;
}

// Refuses input that fails verify_axioms (MathError "AxiomViolation").
template <Ring R>
ReconstructedRing<R> reconstruct_ring(const FactorSystem<R>& fs) {
    verify_axioms(fs).require("AxiomViolation");
    return ReconstructedRing<R>(std::make_shared<const FactorSystem<R>>(fs));
}

// (ab)c = a(bc) on all triples of frame entries and base samples whose
// products stay inside the group model.
template <Ring R>
Report associativity_check(const ReconstructedRing<R>& S, const FrameSystem<ReconstructedRing<R>>& fr,
                           const std::vector<typename R::Element>& samples) {
    using Element = typename ReconstructedRing<R>::Element;
    std::vector<std::pair<int, Element>> pool;
    for (const auto& [g, f] : fr.cols)
        for (std::size_t i = 0; i < f.size(); ++i) {
            pool.emplace_back(g, f.x(i, 0));
            pool.emplace_back(S.group().inv(g), f.y(i, 0));
        }
    for (const auto& r : samples) pool.emplace_back(S.group().identity(), S.from_base(r));
    const auto& G = S.group();
    Report rep;
    std::size_t tested = 0;
    for (const auto& [ga, a] : pool)
        for (const auto& [gb, b] : pool) {
            auto gab = G.mul(ga, gb);
            if (!gab) continue;
            auto ab = S.mul(a, b);
            for (const auto& [gc, c] : pool) {
                auto gbc = G.mul(gb, gc);
                if (!gbc || !G.mul(*gab, gc) || !G.mul(ga, *gbc)) continue;
                ++tested;
                bool ok = S.mul(ab, c) == S.mul(a, S.mul(b, c));
                if (!ok) rep.add("associativity", false, G.name(ga) + "," + G.name(gb) + "," + G.name(gc));
            }
        }
    rep.add("associativity", rep.ok(), std::to_string(tested) + " triples");
    return rep;
}

// Compares two factor systems on the same index set: alpha on the test
// elements of `a` and omega entrywise.
template <Ring R>
Report compare_systems(const FactorSystem<R>& a, const FactorSystem<R>& b) {
    Report rep;
    for (const auto& [g, al] : a.alpha) {
        bool ok = b.alpha.count(g) && b.alpha_one(g) == al.unit();
        for (const auto& x : a.test_elements()) ok = ok && b.alpha_of(g, x) == a.alpha_of(g, x);
        rep.add("alpha", ok, a.group.name(g));
    }
    for (const auto& [p, w] : a.omega)
        rep.add("omega", b.has_pair(p.first, p.second) && b.w(p.first, p.second) == w,
                "(" + a.group.name(p.first) + "," + a.group.name(p.second) + ")");
    return rep;
}

}  // namespace sgr
