#include "doctest.h"

#include "fixtures.hpp"
#include "sgr/atiyah.hpp"
#include "sgr/l12.hpp"
#include "sgr/reconstruct.hpp"

using namespace sgr;
using namespace testsupport;

namespace {

using Smat = ScalarMatrixRing;
using SmatM = Mat<Smat::Element>;

// v w^T / (w^T v), a random rank-one idempotent of M_2(Q).
Smat::Element rank_one_idempotent(const Smat& R, std::mt19937& rng) {
    for (;;) {
        Scalar v[2] = {rand_scalar(rng), rand_scalar(rng)}, w[2] = {rand_scalar(rng), rand_scalar(rng)};
        Scalar t = v[0] * w[0] + v[1] * w[1];
        if (t.is_zero()) continue;
        auto p = R.zero();
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) p[2 * i + j] = v[i] * w[j] / t;
        return p;
    }
}

// Section on L(1,2) given by delta_A for scalar matrices A.
LieBasisSection<LpaRing> l12_section(const LpaRing& L, const std::vector<std::string>& names,
                                     const std::vector<DeltaA>& as,
                                     std::vector<std::vector<std::vector<Scalar>>> c) {
    LieBasisSection<LpaRing> sec;
    sec.names = names;
    sec.c = std::move(c);
    for (const auto& A : as) {
        auto d = delta_a_build(L, A);
        sec.derivations.push_back(d);
        sec.lifts.push_back(graded_from_rule<LpaRing>([L, d](const LpaElement& x) { return d(L, x); }));
    }
    return sec;
}

DeltaA scalar_a(const LpaRing& L, int a11, int a12, int a21, int a22) {
    return delta_a_matrix(L, L.scalar(a11), L.scalar(a12), L.scalar(a21), L.scalar(a22));
}

// pgl_2 acting on the edges: H = E11, E = E12, F = E21 with [E,F] = 2H modulo the identity.
LieBasisSection<LpaRing> sl2_section(const LpaRing& L) {
    auto c = LieBasisSection<LpaRing>::abelian(3);
    c[0][1][1] = 1, c[1][0][1] = -1;
    c[0][2][2] = -1, c[2][0][2] = 1;
    c[1][2][0] = 2, c[2][1][0] = -2;
    return l12_section(L, {"H", "E", "F"}, {scalar_a(L, 1, 0, 0, 0), scalar_a(L, 0, 1, 0, 0), scalar_a(L, 0, 0, 1, 0)}, c);
}

std::vector<LpaElement> l12_homogeneous(const LpaRing& L, unsigned seed, int count) {
    std::mt19937 rng(seed);
    std::vector<LpaElement> out;
    for (int k = 0; k < count; ++k) out.push_back(rand_homogeneous(L, rng, k % 5 - 2));
    return out;
}

using Heis = ReconstructedRing<LaurentRing>;

struct HeisenbergModel {
    FactorSystem<LaurentRing> fs = heisenberg(3);
    Heis S = reconstruct_ring(fs);
    FrameSystem<Heis> fr = canonical_frames(S);
};

// span(d_u, v d_u, v^2 d_u), canonical lifts with eta = 0.
LieBasisSection<Heis> heisenberg_section(const HeisenbergModel& m) {
    const auto& T = m.fs.ring;
    LieBasisSection<Heis> sec;
    sec.c = LieBasisSection<Heis>::abelian(3);
    auto u = T.var(0), ui = T.var(0, -1);
    for (int k = 0; k < 3; ++k) {
        auto vk = T.var(1, k);
        auto d = Derivation<LaurentRing>::from_images({T.mul(vk, u), T.neg(T.mul(vk, ui)), T.zero(), T.zero()});
        sec.names.push_back("v^" + std::to_string(k) + " d_u");
        sec.derivations.push_back(d);
        sec.lifts.push_back(build_lift(m.S, m.fr, m.fs, d, zero_eta(m.fs)));
    }
    return sec;
}

std::vector<Heis::Element> heis_samples(const HeisenbergModel& m, unsigned seed, int count) {
    std::mt19937 rng(seed);
    std::vector<Heis::Element> out;
    for (int k = 0; k < count; ++k) out.push_back(m.S.view(k % 5 - 2, mat::scalar1(m.fs.ring, rand_laurent(m.fs.ring, rng))));
    return out;
}

// psi(n) = sum_{k<n} alpha_k(a) and psi(-n) = -alpha_{-n}(psi(n)).
std::map<int, LaurentRing::Element> crossed_from_generator(const FactorSystem<LaurentRing>& fs,
                                                           const LaurentRing::Element& a) {
    const auto& T = fs.ring;
    std::map<int, LaurentRing::Element> psi{{0, T.zero()}};
    auto alpha = [&](int g, const LaurentRing::Element& x) { return fs.alpha_of(g, mat::scalar1(T, x))(0, 0); };
    for (int n = 1; n <= 3; ++n) psi[n] = T.add(psi[n - 1], alpha(n - 1, a));
    for (int n = 1; n <= 3; ++n) psi[-n] = T.neg(alpha(-n, psi[n]));
    return psi;
}

}  // namespace

TEST_CASE("Grassmann connection: direct curvature against the matrix formula") {
    Smat R(2);
    std::mt19937 rng(17);
    int direct_matches_formula = 0, matches_written_sign = 0;
    for (int k = 0; k < 5; ++k) {
        auto p = mat::scalar1(R, rank_one_idempotent(R, rng));
        auto d1 = inner(R, rand_smat(R, rng)), d2 = inner(R, rand_smat(R, rng));
        auto d12 = bracket(R, d1, d2);
        auto e1 = d1(R, p), e2 = d2(R, p), e12 = d12(R, p);
        auto u = mat::scalar1(R, rand_smat(R, rng));
        auto direct = row_curvature(R, d1, d2, d12, e1, e2, e12, p, u);
        auto up = mat::mul(R, u, p);
        auto om = omega_matrix(R, d1, d2, e1, e2, e12);
        CHECK(om == grassmann_omega(R, d1, d2, p));
        auto via = mat::mul(R, mat::mul(R, up, om), p);
        direct_matches_formula += direct == via;
        auto written = mat::mul(R, mat::mul(R, up, mat::commutator(R, e1, e2)), p);
        matches_written_sign += direct == written && !mat::is_zero(R, direct);
    }
    CHECK(direct_matches_formula == 5);
    CHECK(matches_written_sign == 0);
}

TEST_CASE("Grassmann curvature vanishes when the derivations fix p") {
    Smat R(2);
    std::mt19937 rng(4);
    auto p0 = rank_one_idempotent(R, rng);
    auto p = mat::scalar1(R, p0);
    auto d1 = inner(R, p0), d2 = inner(R, R.add(R.scalar(3), p0));
    CHECK(mat::is_zero(R, grassmann_omega(R, d1, d2, p)));
    auto d12 = bracket(R, d1, d2);
    auto u = mat::scalar1(R, rand_smat(R, rng));
    CHECK(mat::is_zero(R, row_curvature(R, d1, d2, d12, d1(R, p), d2(R, p), d12(R, p), p, u)));
}

TEST_CASE("pgl_2 acting on L(1,2): curvature -deg on (E,F)") {
    const auto& L = l12();
    auto sec = sl2_section(L);
    auto win = l0_spanning(L, 1);
    CHECK(section_checks(L, sec, l0_samples(L, 3)).ok());
    auto fr = lpa_frames(L, 2, PositiveFrames::EdgePower);
    auto fs = extract_factor_system(L, fr);
    auto samples = l12_homogeneous(L, 8, 12);

    auto f = atiyah_curvature(L, fr, sec, 1, 2, win);
    for (const auto& [g, v] : f) CHECK(v == L.scalar(Scalar(-g)));
    CHECK(gauge_scalar(L, fr, f) == Scalar(-1));
    for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}}) {
        auto z = atiyah_curvature(L, fr, sec, i, j, win);
        for (const auto& [g, v] : z) CHECK(L.is_zero(v));
    }
    CHECK(curvature_form_checks(L, sec, samples).ok());
    CHECK(bianchi_check(L, sec, samples).ok());

    for (int g : {1, -1, 2}) {
        auto cm = curvature_matrices(L, fr, fs, sec, 1, 2, g, win);
        CHECK(mat::mul(L, cm.omega, fs.alpha_one(g)) == mat::lmul(L, L.scalar(Scalar(-g)), fs.alpha_one(g)));
    }

    std::vector<std::vector<Scalar>> F(3, std::vector<Scalar>(3));
    F[1][2] = -1, F[2][1] = 1;
    auto v = lecomte_class_p1(sec.c, F);
    REQUIRE(v.splits);
    CHECK(v.xi == std::vector<Scalar>{Scalar::frac(1, 2), Scalar(0), Scalar(0)});

    // sigma - xi deg is flat
    std::vector<std::map<int, LpaElement>> psi(3);
    for (int k = 0; k < 3; ++k)
        for (int g = -2; g <= 2; ++g) psi[k][g] = L.scalar(-v.xi[k] * Scalar(g));
    auto flat = section_change(L, fr, sec, psi, win);
    for (const auto& [g, val] : atiyah_curvature(L, fr, flat, 1, 2, win)) CHECK(L.is_zero(val));
    CHECK(section_change_checks(L, fr, fs, sec, psi, win, samples).ok());
}

TEST_CASE("L(1,2) abelian pair diag(0,1), diag(0,e2e2*) is flat") {
    const auto& L = l12();
    auto A1 = scalar_a(L, 0, 0, 0, 1);
    auto A2 = delta_a_matrix(L, L.zero(), L.zero(), L.zero(), L.parse("e2 e2*"));
    CHECK(mat::is_zero(L, bracket_gr(L, A1, A2, 2)));
    auto sec = l12_section(L, {"a", "b"}, {A1, A2}, LieBasisSection<LpaRing>::abelian(2));
    CHECK(section_checks(L, sec, l0_samples(L, 6)).ok());
    auto fr = lpa_frames(L, 2, PositiveFrames::EdgePower);
    for (const auto& [g, v] : atiyah_curvature(L, fr, sec, 0, 1, l0_spanning(L, 1))) CHECK(L.is_zero(v));
    for (const auto& x : l12_homogeneous(L, 2, 10)) CHECK(curvature_map(L, sec, 0, 1)(x).empty());
}

TEST_CASE("Heisenberg: canonical section is flat, gauge shifts curve it") {
    HeisenbergModel m;
    const auto& T = m.fs.ring;
    auto sec = heisenberg_section(m);
    auto samples = heis_samples(m, 9, 10);
    CHECK(section_checks(m.S, sec, m.fs.samples).ok());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (const auto& x : samples) CHECK(m.S.is_zero(curvature_map(m.S, sec, i, j)(x)));

    std::mt19937 rng(31);
    std::vector<std::map<int, LaurentRing::Element>> psi;
    for (int k = 0; k < 3; ++k) psi.push_back(crossed_from_generator(m.fs, rand_laurent(T, rng, 1, 2)));
    auto rep = section_change_checks(m.S, m.fr, m.fs, sec, psi, m.fs.samples, samples);
    CHECK(rep.ok());
    auto shifted = section_change(m.S, m.fr, sec, psi, m.fs.samples);
    bool curved = false;
    for (const auto& x : samples) curved = curved || !m.S.is_zero(curvature_map(m.S, shifted, 0, 1)(x));
    CHECK(curved);
    CHECK(bianchi_check(m.S, shifted, samples).ok());
    CHECK(curvature_form_checks(m.S, shifted, samples).ok());
    auto f = atiyah_curvature(m.S, m.fr, shifted, 0, 1, m.fs.samples);
    CHECK(crossed_hom_check(T, m.fs.group, frame_action(m.S, m.fr), f, m.fs.samples).ok());
}

TEST_CASE("non-gauge curvature is refused") {
    HeisenbergModel m;
    auto sec = heisenberg_section(m);
    // claim [d_u, v d_u] = v^2 d_u; then F(0,1) = -sigma_2 is nonzero on the base
    sec.c[0][1][2] = 1, sec.c[1][0][2] = -1;
    CHECK_FALSE(section_checks(m.S, sec, m.fs.samples).ok());
    CHECK_THROWS_AS(atiyah_curvature(m.S, m.fr, sec, 0, 1, m.fs.samples), MathError);
}

TEST_CASE("Lecomte class in degree one") {
    SUBCASE("abelian algebra with F = c is not split") {
        auto c = LieBasisSection<LpaRing>::abelian(2);
        std::vector<std::vector<Scalar>> F{{0, 3}, {-3, 0}};
        auto v = lecomte_class_p1(c, F);
        CHECK_FALSE(v.splits);
        REQUIRE(v.witness.size() == 1);
        CHECK_FALSE(v.witness[0].is_zero());
    }
    SUBCASE("class is unchanged by a section change") {
        const auto& L = l12();
        auto sec = sl2_section(L);
        auto fr = lpa_frames(L, 2, PositiveFrames::EdgePower);
        auto win = l0_spanning(L, 1);
        std::vector<std::map<int, LpaElement>> psi(3);
        Scalar shift[3] = {2, -1, Scalar::frac(1, 3)};
        for (int k = 0; k < 3; ++k)
            for (int g = -2; g <= 2; ++g) psi[k][g] = L.scalar(shift[k] * Scalar(g));
        auto sec2 = section_change(L, fr, sec, psi, win);
        std::vector<std::vector<Scalar>> F(3, std::vector<Scalar>(3));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) F[i][j] = gauge_scalar(L, fr, atiyah_curvature(L, fr, sec2, i, j, win));
        // F' = F - psi([.,.])
        CHECK(F[1][2] == Scalar(-1) - Scalar(2) * shift[0]);
        CHECK(F[0][1] == -shift[1]);
        CHECK(lecomte_class_p1(sec.c, F).splits);
    }
    SUBCASE("a non-alternating F is rejected") {
        auto c = LieBasisSection<LpaRing>::abelian(2);
        CHECK_THROWS_AS(lecomte_class_p1(c, {{0, 1}, {1, 0}}), InputError);
    }
    SUBCASE("non-scalar gauge value") {
        HeisenbergModel m;
        auto psi = crossed_from_generator(m.fs, m.fs.ring.var(0));
        CHECK_THROWS_AS(gauge_scalar(m.S, m.fr, psi), MathError);
    }
}
