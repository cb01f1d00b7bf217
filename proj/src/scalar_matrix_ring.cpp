#include "sgr/scalar_matrix_ring.hpp"

#include "sgr/errors.hpp"

namespace sgr {

ScalarMatrixRing::ScalarMatrixRing(std::size_t k, bool diagonal) : k_(k), diagonal_(diagonal) {
    if (k == 0) throw InputError("BadRing", "matrix ring of size 0");
    if (k > 1)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (!diagonal || i == j) gens_.emplace_back(i, j);
}

void ScalarMatrixRing::check(const Element& a) const {
    if (a.size() != k_ * k_) throw InputError("DimensionMismatch", "matrix ring element size");
}

ScalarMatrixRing::Element ScalarMatrixRing::one() const {
    Element e(k_ * k_);
    for (std::size_t i = 0; i < k_; ++i) e[i * k_ + i] = 1;
    return e;
}

ScalarMatrixRing::Element ScalarMatrixRing::add(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

ScalarMatrixRing::Element ScalarMatrixRing::neg(const Element& a) const {
    Element out = a;
    for (auto& v : out) v = -v;
    return out;
}

ScalarMatrixRing::Element ScalarMatrixRing::mul(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element out(k_ * k_);
    for (std::size_t i = 0; i < k_; ++i)
        for (std::size_t l = 0; l < k_; ++l) {
            const auto& x = a[i * k_ + l];
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < k_; ++j) out[i * k_ + j] += x * b[l * k_ + j];
        }
    return out;
}

ScalarMatrixRing::Element ScalarMatrixRing::scale(const Scalar& c, const Element& a) const {
    Element out = a;
    for (auto& v : out) v *= c;
    return out;
}

bool ScalarMatrixRing::is_zero(const Element& a) const {
    for (const auto& v : a)
        if (!v.is_zero()) return false;
    return true;
}

ScalarMatrixRing::Element ScalarMatrixRing::star(const Element& a) const {
    Element out(k_ * k_);
    for (std::size_t i = 0; i < k_; ++i)
        for (std::size_t j = 0; j < k_; ++j) out[j * k_ + i] = a[i * k_ + j].conj();
    return out;
}

ScalarMatrixRing::Element ScalarMatrixRing::unit(std::size_t i, std::size_t j) const {
    Element e(k_ * k_);
    e.at(i * k_ + j) = 1;
    return e;
}

ScalarMatrixRing::Element ScalarMatrixRing::diag(const std::vector<Scalar>& d) const {
    if (d.size() != k_) throw InputError("DimensionMismatch", "diag length");
    Element e(k_ * k_);
    for (std::size_t i = 0; i < k_; ++i) e[i * k_ + i] = d[i];
    return e;
}

std::vector<ScalarMatrixRing::Element> ScalarMatrixRing::generators() const {
    std::vector<Element> g;
    for (auto [i, j] : gens_) g.push_back(unit(i, j));
    return g;
}

std::vector<std::string> ScalarMatrixRing::generator_names() const {
    std::vector<std::string> n;
    for (auto [i, j] : gens_) n.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    return n;
}

std::vector<Relation> ScalarMatrixRing::relations() const {
    std::vector<Relation> rel;
    const int n = static_cast<int>(gens_.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto [i, j] = gens_[static_cast<std::size_t>(a)];
            auto [k, l] = gens_[static_cast<std::size_t>(b)];
            Combo rhs;
            if (j == k)
                for (int c = 0; c < n; ++c)
                    if (gens_[static_cast<std::size_t>(c)] == std::make_pair(i, l)) rhs.push_back({1, {c}});
            rel.push_back({{{1, {a, b}}}, rhs});
        }
    if (n > 0) {
        Combo sum;
        for (int c = 0; c < n; ++c)
            if (gens_[static_cast<std::size_t>(c)].first == gens_[static_cast<std::size_t>(c)].second)
                sum.push_back({1, {c}});
        rel.push_back({sum, {{1, {}}}});
    }
    return rel;
}

Combo ScalarMatrixRing::words(const Element& a) const {
    check(a);
    Combo out;
    if (k_ == 1) {
        if (!a[0].is_zero()) out.push_back({a[0], {}});
        return out;
    }
    for (std::size_t g = 0; g < gens_.size(); ++g) {
        auto [i, j] = gens_[g];
        const auto& v = a[i * k_ + j];
        if (!v.is_zero()) out.push_back({v, {static_cast<int>(g)}});
    }
    for (std::size_t i = 0; i < k_; ++i)
        for (std::size_t j = 0; j < k_; ++j)
            if (diagonal_ && i != j && !a[i * k_ + j].is_zero())
                throw InputError("NotInSubring", "off-diagonal entry in diagonal ring");
    return out;
}

std::map<std::string, Scalar> ScalarMatrixRing::coords(const Element& a) const {
    std::map<std::string, Scalar> out;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) out.emplace(std::to_string(i / k_) + "," + std::to_string(i % k_), a[i]);
    return out;
}

std::string ScalarMatrixRing::show(const Element& a) const {
    if (k_ == 1) return a[0].str();
    std::string s = "[";
    for (std::size_t i = 0; i < k_; ++i) {
        if (i) s += "; ";
        for (std::size_t j = 0; j < k_; ++j) s += (j ? ", " : "") + a[i * k_ + j].str();
    }
    return s + "]";
}

}  // namespace sgr
