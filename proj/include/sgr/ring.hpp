#pragma once

#include <concepts>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sgr/scalar.hpp"

namespace sgr {

// c * g_{w[0]} * g_{w[1]} * ... in terms of a ring's declared generator list.
// The empty word denotes the unit.
struct Term {
    Scalar c;
    std::vector<int> word;
};
using Combo = std::vector<Term>;

// lhs == rhs as elements; each side is a linear combination of words.
struct Relation {
    Combo lhs;
    Combo rhs;
};

// Contract every ring model satisfies. Elements are canonical values, so
// structural equality is ring equality.
template <class R>
concept Ring = requires(const R& r, const typename R::Element& a, const Scalar& c) {
    typename R::Element;
    { r.zero() } -> std::same_as<typename R::Element>;
    { r.one() } -> std::same_as<typename R::Element>;
    { r.add(a, a) } -> std::same_as<typename R::Element>;
    { r.neg(a) } -> std::same_as<typename R::Element>;
    { r.mul(a, a) } -> std::same_as<typename R::Element>;
    { r.scale(c, a) } -> std::same_as<typename R::Element>;
    { r.is_zero(a) } -> std::same_as<bool>;
    { r.has_star() } -> std::same_as<bool>;
    { r.star(a) } -> std::same_as<typename R::Element>;
    { r.generators() } -> std::same_as<std::vector<typename R::Element>>;
    { r.generator_names() } -> std::same_as<std::vector<std::string>>;
    { r.relations() } -> std::same_as<std::vector<Relation>>;
    { r.words(a) } -> std::same_as<Combo>;
    { r.coords(a) } -> std::same_as<std::map<std::string, Scalar>>;
    { r.show(a) } -> std::same_as<std::string>;
    { a == a } -> std::same_as<bool>;
};

// A ring with a group grading (degrees are ints) and a principal component
// Base. to_base requires an element of identity degree.
template <class S>
concept GradedRing = Ring<S> && requires(const S& s, const typename S::Element& a) {
    typename S::Base;
    { s.base() } -> std::same_as<const typename S::Base&>;
    { s.homogeneous_parts(a) } -> std::same_as<std::map<int, typename S::Element>>;
    { s.to_base(a) } -> std::same_as<typename S::Base::Element>;
    { s.from_base(std::declval<typename S::Base::Element>()) } -> std::same_as<typename S::Element>;
};

template <Ring R>
typename R::Element sub(const R& r, const typename R::Element& a, const typename R::Element& b) {
    return r.add(a, r.neg(b));
}

template <Ring R>
typename R::Element commutator(const R& r, const typename R::Element& a,
                               const typename R::Element& b) {
    return sub(r, r.mul(a, b), r.mul(b, a));
}

template <Ring R>
typename R::Element eval_combo(const R& r, const Combo& combo) {
    auto gens = r.generators();
    auto acc = r.zero();
    for (const auto& t : combo) {
        auto w = r.one();
        for (int g : t.word) w = r.mul(w, gens.at(static_cast<std::size_t>(g)));
        acc = r.add(acc, r.scale(t.c, w));
    }
    return acc;
}

}  // namespace sgr
