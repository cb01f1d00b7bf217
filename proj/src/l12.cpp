#include "sgr/l12.hpp"

#include <algorithm>

#include "sgr/errors.hpp"

namespace sgr {

namespace {

void require_l12(const LpaRing& L) {
    const auto& g = L.graph();
    if (g.vertices().size() != 1 || g.edges().size() != 2) throw InputError("BadGraph", "expected L(1,2)");
}

LpaElement entry(const DeltaA& A, std::size_t i, std::size_t j) { return A(i, j); }

void check_window(const LpaRing& L, const DeltaA& A, int level) {
    for (const auto& x : A.a) {
        if (!L.is_homogeneous(x, 0)) throw InputError("NotHomogeneous", "delta_A entries must have degree 0");
        if (l0_level(L, x) > level)
            throw OutOfWindow("entry " + L.show(x) + " exceeds level " + std::to_string(level));
    }
}

}  // namespace

Derivation<LpaRing> edge_count_rule(const LpaRing& L, int edge) {
    if (edge < 0 || edge >= static_cast<int>(L.graph().edges().size())) throw InputError("UnknownEdge", "edge index");
    return Derivation<LpaRing>::rule("edge_count_difference", [edge](const LpaElement& x) {
        LpaElement out;
        for (const auto& [m, c] : x) {
            long n = static_cast<long>(std::count(m.real.begin(), m.real.end(), edge)) -
                     static_cast<long>(std::count(m.ghost.begin(), m.ghost.end(), edge));
            if (n != 0) out.emplace(m, c * Scalar(n));
        }
        return out;
    });
}

Derivation<LpaRing> degree_rule(const LpaRing&, const Scalar& lambda) {
    return Derivation<LpaRing>::rule("degree", [lambda](const LpaElement& x) {
        LpaElement out;
        for (const auto& [m, c] : x)
            if (m.degree() != 0) out.emplace(m, c * lambda * Scalar(m.degree()));
        return out;
    });
}

int l0_level(const LpaRing& L, const LpaElement& x) {
    (void)L;
    int level = 0;
    for (const auto& [m, c] : x) level = std::max(level, static_cast<int>(std::max(m.real.size(), m.ghost.size())));
    return level;
}

std::vector<LpaElement> l0_spanning(const LpaRing& L, int level) {
    std::vector<LpaElement> out;
    for (int n = 0; n <= level; ++n)
        for (const auto& u : level_span(L, n)) out.push_back(u.value);
    return out;
}

DeltaA delta_a_matrix(const LpaRing& L, const LpaElement& a1, const LpaElement& b, const LpaElement& c,
                      const LpaElement& a2) {
    DeltaA A(2, 2, L.zero());
    A(0, 0) = a1;
    A(0, 1) = b;
    A(1, 0) = c;
    A(1, 1) = a2;
    return A;
}

Derivation<LpaRing> delta_a_build(const LpaRing& L, const DeltaA& A) {
    require_l12(L);
    if (A.rows != 2 || A.cols != 2) throw InputError("DimensionMismatch", "delta_A needs a 2x2 matrix");
    for (const auto& x : A.a)
        if (!L.is_homogeneous(x, 0)) throw InputError("NotHomogeneous", "delta_A entries must have degree 0");
    std::vector<LpaElement> img(5);  // v, e1, e2, e1*, e2*
    for (std::size_t j = 0; j < 2; ++j) {
        LpaElement re, gh;
        for (std::size_t i = 0; i < 2; ++i) {
            re = L.add(re, L.mul(L.edge(static_cast<int>(i)), entry(A, i, j)));
            gh = L.add(gh, L.neg(L.mul(entry(A, j, i), L.ghost(static_cast<int>(i)))));
        }
        img[1 + j] = re;
        img[3 + j] = gh;
    }
    return Derivation<LpaRing>::from_images(img);
}

DeltaA delta_a_extract(const LpaRing& L, const Derivation<LpaRing>& d) {
    require_l12(L);
    DeltaA A(2, 2, L.zero());
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            A(i, j) = L.mul(L.ghost(static_cast<int>(i)), d(L, L.edge(static_cast<int>(j))));
    return A;
}

DeltaA bracket_gr(const LpaRing& L, const DeltaA& A1, const DeltaA& A2, int level) {
    check_window(L, A1, level);
    check_window(L, A2, level);
    auto d1 = delta_a_build(L, A1);
    auto d2 = delta_a_build(L, A2);
    auto out = mat::add(L, mat::commutator(L, A1, A2), mat::sub(L, d1(L, A2), d2(L, A1)));
    check_window(L, out, level);
    return out;
}

Report bracket_gr_check(const LpaRing& L, const DeltaA& A1, const DeltaA& A2, int level) {
    Report rep;
    auto d1 = delta_a_build(L, A1);
    auto d2 = delta_a_build(L, A2);
    auto d3 = delta_a_build(L, bracket_gr(L, A1, A2, level));
    for (auto x : {L.edge(0), L.edge(1), L.ghost(0), L.ghost(1)}) {
        auto direct = sub(L, d1(L, d2(L, x)), d2(L, d1(L, x)));
        rep.add("bracket_gr", direct == d3(L, x), L.show(x));
    }
    return rep;
}

Report alpha1_commute_check(const LpaRing& L, const DeltaA& A, int level) {
    require_l12(L);
    Report rep;
    auto d = delta_a_build(L, A);
    const auto e1 = L.edge(0), e2 = L.edge(1), e1s = L.ghost(0), e2s = L.ghost(1);
    for (const auto& r : l0_spanning(L, level)) {
        auto lhs = d(L, L.mul(L.mul(e1, r), e1s));
        auto rhs = L.mul(L.mul(e1, d(L, r)), e1s);
        bool ok = lhs == rhs;
        rep.add("alpha1_commute", ok, ok ? L.show(r) : "r=" + L.show(r) + " defect=" + L.show(sub(L, lhs, rhs)));
        if (ok) continue;
        auto predicted = L.mul(L.mul(e1, commutator(L, A(0, 0), r)), e1s);
        predicted = L.add(predicted, L.mul(L.mul(L.mul(e2, A(1, 0)), r), e1s));
        predicted = L.add(predicted, L.neg(L.mul(L.mul(L.mul(e1, r), A(0, 1)), e2s)));
        if (!(sub(L, lhs, rhs) == predicted)) throw MathError("PredictionMismatch", "defect differs at r=" + L.show(r));
    }
    return rep;
}

bool is_diag_scalar_form(const LpaRing& L, const DeltaA& A) {
    if (!L.is_zero(A(0, 1)) || !L.is_zero(A(1, 0))) return false;
    const auto& a1 = A(0, 0);
    if (L.is_zero(a1)) return true;
    return a1.size() == 1 && a1 == L.scale(a1.begin()->second, L.one());
}

}  // namespace sgr
