#pragma once

// Models shared by several test binaries.

#include <cstdlib>
#include <functional>
#include <initializer_list>

#include "sgr/facsys.hpp"
#include "sgr/report.hpp"
#include "support.hpp"

namespace testsupport {

inline const LpaRing& l12() {
    static LpaRing L(Graph::l12());
    return L;
}

inline std::vector<LpaElement> l0_samples(const LpaRing& L, unsigned seed, int count = 6) {
    std::mt19937 rng(seed);
    std::vector<LpaElement> out{L.one()};
    for (int i = 0; i < count; ++i) out.push_back(rand_l0(L, rng, 1 + i % 2));
    return out;
}

inline bool has_failure_tag(const Report& r, const std::string& prefix) {
    for (const auto& c : r.checks())
        if (!c.pass && c.tag.rfind(prefix, 0) == 0) return true;
    return false;
}

// Skew data over Laurent polynomials in the given variables: alpha_n from
// images of the variables under the n-th power of one automorphism, omega = 1.
inline FactorSystem<LaurentRing> laurent_skew(const LaurentRing& T, int window,
                                              const std::function<std::vector<LaurentRing::Element>(int)>& var_images,
                                              unsigned seed = 2) {
    FactorSystem<LaurentRing> fs(T);
    fs.group = GroupModel::integer_window(window);
    auto one = mat::identity(T, 1);
    for (int n = -window; n <= window; ++n) {
        std::vector<Mat<LaurentRing::Element>> img;
        for (const auto& v : var_images(n)) {
            img.push_back(mat::scalar1(T, v));
            img.push_back(mat::scalar1(T, T.zero()));  // inverse, filled below
        }
        for (std::size_t k = 0; k < img.size(); k += 2) {
            const auto& v = img[k](0, 0);
            const auto& [e, c] = *v.begin();
            LaurentRing::Exponent ne(e.size());
            for (std::size_t j = 0; j < e.size(); ++j) ne[j] = -e[j];
            img[k + 1] = mat::scalar1(T, T.monomial(ne, c.inverse()));
        }
        fs.alpha.emplace(n, AlphaMap<LaurentRing>::table(img, one));
    }
    for (int g = -window; g <= window; ++g)
        for (int h = -window; h <= window; ++h)
            if (std::abs(g + h) <= window) {
                fs.omega.emplace(Pair{g, h}, one);
                fs.omega_tilde.emplace(Pair{g, h}, one);
            }
    std::mt19937 rng(seed);
    for (int i = 0; i < 4; ++i) fs.samples.push_back(rand_laurent(T, rng));
    return fs;
}

// Crossed product data over k[u^{±1}]: alpha_n(u) = q^n u, omega = 1.
inline FactorSystem<LaurentRing> quantum_torus(const Scalar& q, int window) {
    LaurentRing T({"u"});
    return laurent_skew(T, window, [&](int n) {
        Scalar qn(1);
        for (int k = 0; k < std::abs(n); ++k) qn = n > 0 ? qn * q : qn / q;
        return std::vector<LaurentRing::Element>{T.scale(qn, T.var(0))};
    });
}

// k[u^{±1}, v^{±1}] with alpha(u) = uv, alpha(v) = v.
inline FactorSystem<LaurentRing> heisenberg(int window) {
    LaurentRing T({"u", "v"});
    return laurent_skew(T, window, [&](int n) {
        return std::vector<LaurentRing::Element>{T.mul(T.var(0), T.var(1, n)), T.var(1)};
    });
}

// Partial products of homogeneous elements stay inside an integer window.
template <class S>
bool in_window(const S& s, std::initializer_list<const typename S::Element*> xs) {
    int sum = 0;
    for (const auto* x : xs) {
        if (x->empty()) continue;
        sum += x->begin()->first;
        if (std::abs(sum) > s.group().bound()) return false;
    }
    return true;
}

}  // namespace testsupport
