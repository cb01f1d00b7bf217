#pragma once

#include <map>
#include <string>
#include <vector>

#include "sgr/ring.hpp"

namespace sgr {

// Commutative Laurent polynomials k[x_1^{±1}, ..., x_m^{±1}].
// Optional involution: conjugate coefficients and send x_i to sign * x_i^{-1}.
class LaurentRing {
public:
    using Exponent = std::vector<int>;
    using Element = std::map<Exponent, Scalar>;

    enum class Star { None, Inverse, NegInverse };

    explicit LaurentRing(std::vector<std::string> vars, Star star = Star::None);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    Star star_kind() const { return star_; }

    Element zero() const { return {}; }
    Element one() const { return monomial(Exponent(nvars(), 0)); }
    Element add(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element mul(const Element& a, const Element& b) const;
    Element scale(const Scalar& c, const Element& a) const;
    bool is_zero(const Element& a) const { return a.empty(); }
    bool has_star() const { return star_ != Star::None; }
    Element star(const Element& a) const;

    // Generators x_1, x_1^{-1}, x_2, x_2^{-1}, ...
    std::vector<Element> generators() const;
    std::vector<std::string> generator_names() const;
    std::vector<Relation> relations() const;
    Combo words(const Element& a) const;
    std::map<std::string, Scalar> coords(const Element& a) const;
    std::string show(const Element& a) const;

    Element monomial(const Exponent& e, const Scalar& c = 1) const;
    Element var(std::size_t i, int power = 1) const;
    Element scalar(const Scalar& c) const { return monomial(Exponent(nvars(), 0), c); }
    // Parses sums like "2 u^2 v^-1 + -1/3 v"
    Element parse(const std::string& text) const;
    // Ring endomorphism given by images of the variables (images must be monomials
    // times scalars so that inverses exist).
    Element substitute(const Element& a, const std::vector<Element>& var_images) const;

private:
    std::vector<std::string> vars_;
    Star star_;
};

}  // namespace sgr
