#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sgr/matrix.hpp"
#include "sgr/report.hpp"

namespace sgr {

// A derivation of R, given either by images of the declared generators
// (extended by the Leibniz rule along words) or by a named closure.
template <Ring R>
class Derivation {
public:
    using E = typename R::Element;

    static Derivation zero() {
        Derivation d;
        d.name_ = "zero";
        d.zero_ = true;
        return d;
    }
    static Derivation from_images(std::vector<E> images) {
        Derivation d;
        d.name_ = "generator_images";
        d.images_ = std::move(images);
        return d;
    }
    static Derivation rule(std::string name, std::function<E(const E&)> f) {
        Derivation d;
        d.name_ = std::move(name);
        d.fn_ = std::move(f);
        return d;
    }

    const std::string& name() const { return name_; }
    bool is_zero_rule() const { return zero_; }
    bool has_images() const { return !fn_ && !zero_; }
    const std::vector<E>& images() const { return images_; }

    E operator()(const R& r, const E& x) const {
        if (zero_) return r.zero();
        if (fn_) return fn_(x);
        return on_combo(r, r.words(x));
    }

    Mat<E> operator()(const R& r, const Mat<E>& m) const {
        return mat::map(m, [&](const E& x) { return (*this)(r, x); });
    }

    // Leibniz expansion along each word.
    E on_combo(const R& r, const Combo& combo) const {
        if (zero_) return r.zero();
        auto gens = r.generators();
        auto acc = r.zero();
        for (const auto& t : combo) {
            const std::size_t n = t.word.size();
            std::vector<E> prefix(n + 1, r.one());
            for (std::size_t k = 0; k < n; ++k) prefix[k + 1] = r.mul(prefix[k], gens.at(static_cast<std::size_t>(t.word[k])));
            auto suffix = r.one();
            for (std::size_t k = n; k-- > 0;) {
                const auto& img = images_.at(static_cast<std::size_t>(t.word[k]));
                if (!r.is_zero(img)) acc = r.add(acc, r.scale(t.c, r.mul(r.mul(prefix[k], img), suffix)));
                suffix = r.mul(gens.at(static_cast<std::size_t>(t.word[k])), suffix);
            }
        }
        return acc;
    }

private:
    std::string name_;
    bool zero_ = false;
    std::vector<E> images_;
    std::function<E(const E&)> fn_;
};

// sum_k c_k d_k as a closure.
template <Ring R>
Derivation<R> combine(const R& r, std::vector<std::pair<Scalar, Derivation<R>>> parts) {
    return Derivation<R>::rule("combination", [r, parts = std::move(parts)](const typename R::Element& x) {
        auto acc = r.zero();
        for (const auto& [c, d] : parts) acc = r.add(acc, r.scale(c, d(r, x)));
        return acc;
    });
}

template <Ring R>
Derivation<R> bracket(const R& r, const Derivation<R>& a, const Derivation<R>& b) {
    return Derivation<R>::rule("bracket", [r, a, b](const typename R::Element& x) {
        return sub(r, a(r, b(r, x)), b(r, a(r, x)));
    });
}

// [a, .]
template <Ring R>
Derivation<R> inner(const R& r, const typename R::Element& a) {
    return Derivation<R>::rule("inner", [r, a](const typename R::Element& x) { return commutator(r, a, x); });
}

// Leibniz, additivity, relations (image form) and, when requested, star
// compatibility on the given samples.
template <Ring R>
Report derivation_checks(const R& r, const Derivation<R>& d, const std::vector<typename R::Element>& samples,
                         bool check_star = false) {
    Report rep;
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = 0; j < samples.size(); ++j) {
            const auto &a = samples[i], &b = samples[j];
            auto lhs = d(r, r.mul(a, b));
            auto rhs = r.add(r.mul(d(r, a), b), r.mul(a, d(r, b)));
            rep.add("derivation:leibniz", lhs == rhs, r.show(a) + " * " + r.show(b));
            if (j == i) continue;
            rep.add("derivation:additive", d(r, r.add(a, b)) == r.add(d(r, a), d(r, b)));
        }
    if (d.has_images())
        for (const auto& rel : r.relations())
            rep.add("derivation:relation", d.on_combo(r, rel.lhs) == d.on_combo(r, rel.rhs),
                    r.show(eval_combo(r, rel.lhs)) + " = " + r.show(eval_combo(r, rel.rhs)));
    if (check_star)
        for (const auto& a : samples)
            rep.add("derivation:star", d(r, r.star(a)) == r.star(d(r, a)), r.show(a));
    return rep;
}

}  // namespace sgr
