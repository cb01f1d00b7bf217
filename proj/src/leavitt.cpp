#include "sgr/leavitt.hpp"

#include <set>

#include "sgr/errors.hpp"
#include "sgr/linalg.hpp"

namespace sgr {

void require_sink_free(const LpaRing& L) {
    if (L.graph().has_sinks()) throw InputError("SinkPresent", "frame constructions need a sink-free graph");
}

LpaFrame frame_negative(const LpaRing& L, int n) {
    require_sink_free(L);
    if (n < 1) throw InputError("BadDegree", "frame_negative needs n >= 1");
    std::vector<LpaElement> xs, ys;
    for (const auto& p : L.graph().paths(n)) {
        xs.push_back(L.ghost_path(p));
        ys.push_back(L.path(p));
    }
    return {-n, mat::column(L, xs), mat::column(L, ys)};
}

LpaFrame frame_edge_power(const LpaRing& L, int n) {
    require_sink_free(L);
    if (L.graph().vertices().size() != 1 || L.graph().edges().empty())
        throw InputError("BadGraph", "edge-power frames need a single-vertex graph");
    if (n < 1) throw InputError("BadDegree", "frame_edge_power needs n >= 1");
    std::vector<int> p(static_cast<std::size_t>(n), 0);
    return {n, mat::column(L, {L.path(p)}), mat::column(L, {L.ghost_path(p)})};
}

std::vector<LpaElement> parseval_edge_column(const LpaRing& L, int e, int n) {
    const auto& g = L.graph();
    int r = g.edges()[static_cast<std::size_t>(e)].dst;
    if (g.on_cycle(r)) {
        // lexicographically first real path of length n+1 ending at r(e)
        for (const auto& alpha : g.paths(n + 1))
            if (g.edges()[static_cast<std::size_t>(alpha.back())].dst == r)
                return {L.monomial(alpha, {e})};
        throw MathError("ParsevalConstruction", "no return path found");
    }
    std::vector<LpaElement> out;
    auto es = L.ghost(e);
    for (int f : g.out_edges(r))
        for (const auto& y : parseval_edge_column(L, f, n + 1)) out.push_back(L.mul(y, es));
    return out;
}

LpaFrame parseval_frame(const LpaRing& L, int n) {
    require_sink_free(L);
    if (n < 0) return frame_negative(L, -n);
    if (n == 0) return {0, mat::scalar1(L, L.one()), mat::scalar1(L, L.one())};
    std::vector<LpaElement> z;
    for (std::size_t v = 0; v < L.graph().vertices().size(); ++v)
        for (int e : L.graph().out_edges(static_cast<int>(v)))
            for (auto& x : parseval_edge_column(L, e, n)) z.push_back(std::move(x));
    std::vector<LpaElement> zs;
    for (const auto& x : z) zs.push_back(L.star(x));
    return {n, mat::column(L, z), mat::column(L, zs)};
}

LpaFrames lpa_frames(const LpaRing& L, int window, PositiveFrames kind) {
    LpaFrames fr;
    fr.group = GroupModel::integer_window(window);
    fr.cols[0] = {0, mat::scalar1(L, L.one()), mat::scalar1(L, L.one())};
    for (int n = 1; n <= window; ++n) {
        fr.cols[-n] = frame_negative(L, n);
        fr.cols[n] = kind == PositiveFrames::EdgePower ? frame_edge_power(L, n) : parseval_frame(L, n);
    }
    return fr;
}

std::vector<LevelUnit> level_span(const LpaRing& L, int n) {
    const auto& g = L.graph();
    std::vector<LevelUnit> out;
    if (n == 0) {
        for (std::size_t v = 0; v < g.vertices().size(); ++v)
            out.push_back({{}, {}, L.vertex(static_cast<int>(v))});
        return out;
    }
    auto ps = g.paths(n);
    for (const auto& a : ps)
        for (const auto& b : ps)
            if (g.edges()[static_cast<std::size_t>(a.back())].dst == g.edges()[static_cast<std::size_t>(b.back())].dst)
                out.push_back({a, b, L.monomial(a, b)});
    return out;
}

namespace {

// Solve u r = target for r in the span of `basis`; nullopt if impossible.
std::optional<LpaElement> left_divide(const LpaRing& L, const LpaElement& u, const LpaElement& target,
                                      const std::vector<LevelUnit>& basis) {
    std::vector<std::map<std::string, Scalar>> cols;
    std::set<std::string> keys;
    for (const auto& b : basis) {
        cols.push_back(L.coords(L.mul(u, b.value)));
        for (const auto& [k, v] : cols.back()) keys.insert(k);
    }
    auto tc = L.coords(target);
    for (const auto& [k, v] : tc) keys.insert(k);
    linalg::Dense m;
    linalg::Vec rhs;
    for (const auto& k : keys) {
        linalg::Vec row;
        for (const auto& c : cols) {
            auto it = c.find(k);
            row.push_back(it == c.end() ? Scalar(0) : it->second);
        }
        m.push_back(std::move(row));
        auto it = tc.find(k);
        rhs.push_back(it == tc.end() ? Scalar(0) : it->second);
    }
    auto sol = linalg::solve(m, rhs, basis.size());
    if (!sol) return std::nullopt;
    LpaElement r;
    for (std::size_t i = 0; i < basis.size(); ++i) r = L.add(r, L.scale((*sol)[i], basis[i].value));
    return r;
}

}  // namespace

LpaElement invertible_from_free_basis(const LpaRing& L, int g, const LpaElement& u, int level) {
    if (!L.is_homogeneous(u, g)) throw InputError("NotHomogeneous", "u must lie in S_g");
    // 1 = sum_i X_i Y_i with X_i in S_g, Y_i in S_{-g}: the degree -g frame read backwards
    LpaFrame f = g > 0 ? frame_negative(L, g) : parseval_frame(L, -g);
    auto basis = level_span(L, level);
    LpaElement v;
    for (std::size_t i = 0; i < f.size(); ++i) {
        auto r = left_divide(L, u, f.y(i, 0), basis);
        if (!r)
            throw MathError("NotABasis", "frame entry " + L.show(f.y(i, 0)) + " is not in u*R (window level " +
                                             std::to_string(level) + ")");
        v = L.add(v, L.mul(*r, f.x(i, 0)));
    }
    if (!(L.mul(u, v) == L.one())) throw MathError("NotABasis", "u v = " + L.show(L.mul(u, v)));
    if (!(L.mul(v, u) == L.one())) throw MathError("NotABasis", "v u = " + L.show(L.mul(v, u)));
    return v;
}

}  // namespace sgr
