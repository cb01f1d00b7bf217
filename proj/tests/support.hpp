#pragma once

// Shared random generators for the test binaries.

#include <random>

#include "sgr/laurent.hpp"
#include "sgr/leavitt.hpp"
#include "sgr/scalar_matrix_ring.hpp"

namespace testsupport {

using namespace sgr;

inline Scalar rand_scalar(std::mt19937& rng, bool complex = false) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    Scalar s(mpq_class(num(rng), den(rng)));
    if (complex) s += Scalar(mpq_class(0), mpq_class(num(rng), den(rng)));
    return s;
}

inline Scalar rand_nonzero(std::mt19937& rng) {
    Scalar s;
    while (s.is_zero()) s = rand_scalar(rng);
    return s;
}

// Random combination of level-`level` monomials alpha beta^*.
inline LpaElement rand_l0(const LpaRing& L, std::mt19937& rng, int level, int terms = 3) {
    auto span = level_span(L, level);
    std::uniform_int_distribution<std::size_t> pick(0, span.size() - 1);
    LpaElement a;
    for (int i = 0; i < terms; ++i) a = L.add(a, L.scale(rand_nonzero(rng), span[pick(rng)].value));
    return a;
}

// Random monomial alpha beta^* with |alpha| = la, |beta| = lb.
inline LpaElement rand_monomial(const LpaRing& L, std::mt19937& rng, int la, int lb) {
    const auto& g = L.graph();
    for (;;) {
        auto pick_path = [&](int n) {
            std::vector<int> p;
            if (n == 0) return p;
            auto ps = g.paths(n);
            std::uniform_int_distribution<std::size_t> d(0, ps.size() - 1);
            return ps[d(rng)];
        };
        auto a = pick_path(la), b = pick_path(lb);
        auto m = L.monomial(a, b);
        if (!m.empty()) return m;
    }
}

inline LpaElement rand_homogeneous(const LpaRing& L, std::mt19937& rng, int degree, int max_len = 3,
                                   int terms = 2) {
    LpaElement a;
    std::uniform_int_distribution<int> len(std::max(0, degree), max_len);
    for (int i = 0; i < terms; ++i) {
        int la = len(rng);
        int lb = la - degree;
        if (lb < 0) lb = 0, la = degree;
        a = L.add(a, L.scale(rand_nonzero(rng), rand_monomial(L, rng, la, lb)));
    }
    return a;
}

inline LaurentRing::Element rand_laurent(const LaurentRing& R, std::mt19937& rng, int spread = 2,
                                         int terms = 3) {
    std::uniform_int_distribution<int> ex(-spread, spread);
    LaurentRing::Element a;
    for (int i = 0; i < terms; ++i) {
        LaurentRing::Exponent e(R.nvars());
        for (auto& x : e) x = ex(rng);
        a = R.add(a, R.monomial(e, rand_nonzero(rng)));
    }
    return a;
}

inline ScalarMatrixRing::Element rand_smat(const ScalarMatrixRing& R, std::mt19937& rng) {
    auto a = R.zero();
    for (std::size_t i = 0; i < R.dim(); ++i)
        for (std::size_t j = 0; j < R.dim(); ++j)
            if (!R.diagonal() || i == j) a[i * R.dim() + j] = rand_scalar(rng);
    return a;
}

}  // namespace testsupport
