#pragma once

#include <map>
#include <string>
#include <vector>

#include "sgr/ring.hpp"

namespace sgr {

// k x k matrices over the scalars, or the diagonal subring when `diagonal`
// is set. k = 1 gives the scalar field itself.
class ScalarMatrixRing {
public:
    using Element = std::vector<Scalar>;  // row-major k*k

    explicit ScalarMatrixRing(std::size_t k, bool diagonal = false);

    std::size_t dim() const { return k_; }
    bool diagonal() const { return diagonal_; }

    Element zero() const { return Element(k_ * k_); }
    Element one() const;
    Element add(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element mul(const Element& a, const Element& b) const;
    Element scale(const Scalar& c, const Element& a) const;
    bool is_zero(const Element& a) const;
    bool has_star() const { return true; }
    Element star(const Element& a) const;  // conjugate transpose

    // Matrix units E_ij (only E_ii in the diagonal case; none when k = 1).
    std::vector<Element> generators() const;
    std::vector<std::string> generator_names() const;
    std::vector<Relation> relations() const;
    Combo words(const Element& a) const;
    std::map<std::string, Scalar> coords(const Element& a) const;
    std::string show(const Element& a) const;

    Element unit(std::size_t i, std::size_t j) const;
    Element scalar(const Scalar& c) const { return scale(c, one()); }
    Element diag(const std::vector<Scalar>& d) const;

private:
    void check(const Element& a) const;
    std::size_t k_;
    bool diagonal_;
    std::vector<std::pair<std::size_t, std::size_t>> gens_;
};

}  // namespace sgr
