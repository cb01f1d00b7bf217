#include "sgr/lpa.hpp"

#include <algorithm>
#include <sstream>

#include "sgr/errors.hpp"

namespace sgr {

void add_term(LpaElement& acc, const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

LpaRing::LpaRing(Graph g) : graph_(std::make_shared<const Graph>(std::move(g))) {}

int LpaRing::src_of(const std::vector<int>& p, int vertex) const {
    return p.empty() ? vertex : graph_->edges()[static_cast<std::size_t>(p.front())].src;
}

LpaRing::Element LpaRing::one() const {
    Element out;
    for (std::size_t v = 0; v < graph_->vertices().size(); ++v)
        out.emplace(Monomial{{}, {}, static_cast<int>(v)}, Scalar(1));
    return out;
}

LpaRing::Element LpaRing::add(const Element& a, const Element& b) const {
    Element out = a;
    for (const auto& [m, c] : b) add_term(out, m, c);
    return out;
}

LpaRing::Element LpaRing::neg(const Element& a) const {
    Element out = a;
    for (auto& [m, c] : out) c = -c;
    return out;
}

LpaRing::Element LpaRing::scale(const Scalar& c, const Element& a) const {
    if (c.is_zero()) return {};
    Element out = a;
    for (auto& [m, v] : out) v *= c;
    return out;
}

// CK2 oriented by the special edge: alpha' g (beta' g)^* with g = gamma(s(g))
// becomes alpha' beta'^* - sum_{f != g} alpha' f (beta' f)^*.
void LpaRing::add_normalized(std::vector<int> alpha, std::vector<int> beta, int vertex,
                             const Scalar& c, Element& out) const {
    while (!alpha.empty() && !beta.empty() && alpha.back() == beta.back()) {
        int e = alpha.back();
        const auto& edge = graph_->edges()[static_cast<std::size_t>(e)];
        if (graph_->special_edge(edge.src) != e) break;
        alpha.pop_back();
        beta.pop_back();
        for (int f : graph_->out_edges(edge.src)) {
            if (f == e) continue;
            auto a2 = alpha, b2 = beta;
            a2.push_back(f);
            b2.push_back(f);
            add_term(out, Monomial{std::move(a2), std::move(b2),
                                   graph_->edges()[static_cast<std::size_t>(f)].dst},
                     -c);
        }
        vertex = edge.src;
    }
    add_term(out, Monomial{std::move(alpha), std::move(beta), vertex}, c);
}

void LpaRing::mul_monomials(const Monomial& x, const Monomial& y, const Scalar& c,
                            Element& out) const {
    const auto& beta = x.ghost;
    const auto& gamma = y.real;
    if (src_of(beta, x.vertex) != src_of(gamma, y.vertex)) return;
    if (gamma.size() >= beta.size()) {
        if (!std::equal(beta.begin(), beta.end(), gamma.begin())) return;
        auto alpha = x.real;
        alpha.insert(alpha.end(), gamma.begin() + static_cast<std::ptrdiff_t>(beta.size()), gamma.end());
        add_normalized(std::move(alpha), y.ghost, y.vertex, c, out);
    } else {
        if (!std::equal(gamma.begin(), gamma.end(), beta.begin())) return;
        auto delta = y.ghost;
        delta.insert(delta.end(), beta.begin() + static_cast<std::ptrdiff_t>(gamma.size()), beta.end());
        add_normalized(x.real, std::move(delta), x.vertex, c, out);
    }
}

LpaRing::Element LpaRing::mul(const Element& a, const Element& b) const {
    Element out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) mul_monomials(ma, mb, ca * cb, out);
    return out;
}

LpaRing::Element LpaRing::star(const Element& a) const {
    Element out;
    for (const auto& [m, c] : a) out.emplace(Monomial{m.ghost, m.real, m.vertex}, c.conj());
    return out;
}

LpaRing::Element LpaRing::vertex(int v) const { return Element{{Monomial{{}, {}, v}, Scalar(1)}}; }

LpaRing::Element LpaRing::edge(int e) const {
    return Element{{Monomial{{e}, {}, graph_->edges().at(static_cast<std::size_t>(e)).dst}, Scalar(1)}};
}

LpaRing::Element LpaRing::ghost(int e) const {
    return Element{{Monomial{{}, {e}, graph_->edges().at(static_cast<std::size_t>(e)).dst}, Scalar(1)}};
}

LpaRing::Element LpaRing::path(const std::vector<int>& p) const {
    if (p.empty()) return one();
    Element out = edge(p.front());
    for (std::size_t i = 1; i < p.size(); ++i) out = mul(out, edge(p[i]));
    return out;
}

LpaRing::Element LpaRing::ghost_path(const std::vector<int>& p) const { return star(path(p)); }

LpaRing::Element LpaRing::monomial(const std::vector<int>& alpha, const std::vector<int>& beta) const {
    return mul(path(alpha), ghost_path(beta));
}

std::vector<LpaRing::Element> LpaRing::generators() const {
    std::vector<Element> g;
    for (std::size_t v = 0; v < graph_->vertices().size(); ++v) g.push_back(vertex(static_cast<int>(v)));
    for (std::size_t e = 0; e < graph_->edges().size(); ++e) g.push_back(edge(static_cast<int>(e)));
    for (std::size_t e = 0; e < graph_->edges().size(); ++e) g.push_back(ghost(static_cast<int>(e)));
    return g;
}

std::vector<std::string> LpaRing::generator_names() const {
    std::vector<std::string> n = graph_->vertices();
    for (const auto& e : graph_->edges()) n.push_back(e.name);
    for (const auto& e : graph_->edges()) n.push_back(e.name + "*");
    return n;
}

std::vector<Relation> LpaRing::relations() const {
    const int nv = static_cast<int>(graph_->vertices().size());
    const int ne = static_cast<int>(graph_->edges().size());
    auto E = [&](int e) { return nv + e; };
    auto G = [&](int e) { return nv + ne + e; };
    std::vector<Relation> rel;
    for (int v = 0; v < nv; ++v)
        for (int w = 0; w < nv; ++w)
            rel.push_back({{{1, {v, w}}}, v == w ? Combo{{1, {v}}} : Combo{}});
    for (int e = 0; e < ne; ++e) {
        const auto& ed = graph_->edges()[static_cast<std::size_t>(e)];
        rel.push_back({{{1, {ed.src, E(e)}}}, {{1, {E(e)}}}});
        rel.push_back({{{1, {E(e), ed.dst}}}, {{1, {E(e)}}}});
        rel.push_back({{{1, {ed.dst, G(e)}}}, {{1, {G(e)}}}});
        rel.push_back({{{1, {G(e), ed.src}}}, {{1, {G(e)}}}});
        for (int f = 0; f < ne; ++f)
            rel.push_back({{{1, {G(e), E(f)}}}, e == f ? Combo{{1, {ed.dst}}} : Combo{}});
    }
    for (int v = 0; v < nv; ++v) {
        const auto& out = graph_->out_edges(v);
        if (out.empty()) continue;
        Combo lhs;
        for (int e : out) lhs.push_back({1, {E(e), G(e)}});
        rel.push_back({lhs, {{1, {v}}}});
    }
    return rel;
}

Combo LpaRing::words(const Element& a) const {
    const int nv = static_cast<int>(graph_->vertices().size());
    const int ne = static_cast<int>(graph_->edges().size());
    Combo out;
    for (const auto& [m, c] : a) {
        std::vector<int> w;
        if (m.real.empty() && m.ghost.empty()) w.push_back(m.vertex);
        for (int e : m.real) w.push_back(nv + e);
        for (auto it = m.ghost.rbegin(); it != m.ghost.rend(); ++it) w.push_back(nv + ne + *it);
        out.push_back({c, std::move(w)});
    }
    return out;
}

std::map<std::string, Scalar> LpaRing::coords(const Element& a) const {
    std::map<std::string, Scalar> out;
    for (const auto& [m, c] : a) out.emplace(show_monomial(m), c);
    return out;
}

std::string LpaRing::show_monomial(const Monomial& m) const {
    if (m.real.empty() && m.ghost.empty())
        return graph_->vertices().size() == 1 ? "1" : graph_->vertices()[static_cast<std::size_t>(m.vertex)];
    std::string s;
    for (int e : m.real) s += graph_->edges()[static_cast<std::size_t>(e)].name;
    for (auto it = m.ghost.rbegin(); it != m.ghost.rend(); ++it)
        s += graph_->edges()[static_cast<std::size_t>(*it)].name + "*";
    return s;
}

std::string LpaRing::show(const Element& a) const {
    if (a.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : a) {
        if (!first) s += " + ";
        first = false;
        if (!c.is_one()) s += (c.is_real() ? c.str() : "(" + c.str() + ")") + " ";
        s += show_monomial(m);
    }
    return s;
}

std::map<int, LpaRing::Element> LpaRing::homogeneous_parts(const Element& a) const {
    std::map<int, Element> out;
    for (const auto& [m, c] : a) out[m.degree()].emplace(m, c);
    return out;
}

LpaRing::Element LpaRing::to_base(const Element& a) const {
    if (!is_homogeneous(a, 0))
        throw MathError("NotHomogeneous", "expected a degree-0 element, got " + show(a));
    return a;
}

bool LpaRing::is_homogeneous(const Element& a, int d) const {
    for (const auto& [m, c] : a)
        if (m.degree() != d) return false;
    return true;
}

std::vector<Symbol> LpaRing::parse_symbols(const std::string& text) const {
    std::istringstream is(text);
    std::vector<Symbol> out;
    std::string tok;
    while (is >> tok) {
        bool ghost = tok.size() > 1 && tok.back() == '*';
        std::string name = ghost ? tok.substr(0, tok.size() - 1) : tok;
        int e = graph_->edge_index(name);
        if (e >= 0) {
            out.push_back({ghost ? Symbol::G : Symbol::E, e});
            continue;
        }
        int v = graph_->vertex_index(name);
        if (v >= 0 && !ghost) {
            out.push_back({Symbol::V, v});
            continue;
        }
        throw InputError("UnknownSymbol", tok);
    }
    return out;
}

LpaRing::Element LpaRing::eval_word(const std::vector<Symbol>& w) const {
    Element acc = one();
    for (const auto& s : w) {
        switch (s.kind) {
            case Symbol::V: acc = mul(acc, vertex(s.idx)); break;
            case Symbol::E: acc = mul(acc, edge(s.idx)); break;
            case Symbol::G: acc = mul(acc, ghost(s.idx)); break;
        }
    }
    return acc;
}

namespace {

Scalar parse_scalar(const std::string& tok) {
    // forms: 3, -1/2, i, -i, 2i, 3/4i
    if (tok.back() == 'i') {
        std::string n = tok.substr(0, tok.size() - 1);
        mpq_class q = (n.empty() || n == "+") ? mpq_class(1) : (n == "-" ? mpq_class(-1) : mpq_class(n));
        return Scalar(mpq_class(0), q);
    }
    return Scalar(mpq_class(tok));
}

bool looks_scalar(const std::string& tok) {
    if (tok.empty()) return false;
    if (tok == "i" || tok == "-i") return true;
    char c = tok[0];
    return std::isdigit(static_cast<unsigned char>(c)) ||
           ((c == '-' || c == '+') && tok.size() > 1 && std::isdigit(static_cast<unsigned char>(tok[1])));
}

}  // namespace

LpaRing::Element LpaRing::parse(const std::string& text) const {
    Element acc;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t plus = text.find('+', start);
        std::string term = text.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
        std::istringstream is(term);
        std::string first;
        if (is >> first) {
            Scalar c = 1;
            std::string rest;
            if (looks_scalar(first)) {
                try {
                    c = parse_scalar(first);
                } catch (const std::invalid_argument&) {
                    throw InputError("BadScalar", first);
                }
                std::getline(is, rest);
            } else {
                std::getline(is, rest);
                rest = first + " " + rest;
            }
            acc = add(acc, scale(c, eval_word(parse_symbols(rest))));
        }
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    return acc;
}

namespace {

struct WTerm {
    Scalar c;
    std::vector<Symbol> w;
};

}  // namespace

LpaRing::Element LpaRing::rewrite_random_order(const std::vector<Symbol>& word, std::mt19937& rng) const {
    const auto& g = *graph_;
    auto edge = [&](int e) -> const Edge& { return g.edges()[static_cast<std::size_t>(e)]; };
    // start and end vertex of a symbol read as a path
    auto s_of = [&](const Symbol& s) {
        return s.kind == Symbol::V ? s.idx : (s.kind == Symbol::E ? edge(s.idx).src : edge(s.idx).dst);
    };
    auto r_of = [&](const Symbol& s) {
        return s.kind == Symbol::V ? s.idx : (s.kind == Symbol::E ? edge(s.idx).dst : edge(s.idx).src);
    };

    std::vector<WTerm> todo{{Scalar(1), word}};
    Element result;
    while (!todo.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, todo.size() - 1);
        std::size_t ti = pick(rng);
        WTerm t = std::move(todo[ti]);
        todo.erase(todo.begin() + static_cast<std::ptrdiff_t>(ti));
        if (t.w.empty()) {
            result = add(result, scalar(t.c));
            continue;
        }
        // collect applicable redex positions (pairs i, i+1)
        std::vector<std::size_t> redex;
        for (std::size_t i = 0; i + 1 < t.w.size(); ++i) {
            const auto &x = t.w[i], &y = t.w[i + 1];
            bool vertex_pair = x.kind == Symbol::V || y.kind == Symbol::V;
            bool mismatch = r_of(x) != s_of(y);
            bool ghost_real = x.kind == Symbol::G && y.kind == Symbol::E;
            bool ck2 = x.kind == Symbol::E && y.kind == Symbol::G && x.idx == y.idx &&
                       g.special_edge(edge(x.idx).src) == x.idx;
            if (vertex_pair || mismatch || ghost_real || ck2) redex.push_back(i);
        }
        if (redex.empty()) {
            // normal word: reals then ghosts
            std::vector<int> alpha, beta;
            int v = 0;
            if (t.w.size() == 1 && t.w[0].kind == Symbol::V) {
                v = t.w[0].idx;
            } else {
                for (const auto& s : t.w) {
                    if (s.kind == Symbol::E) alpha.push_back(s.idx);
                    else beta.insert(beta.begin(), s.idx);
                }
                v = alpha.empty() ? edge(beta.back()).dst : edge(alpha.back()).dst;
            }
            add_term(result, Monomial{alpha, beta, v}, t.c);
            continue;
        }
        std::uniform_int_distribution<std::size_t> pos(0, redex.size() - 1);
        std::size_t i = redex[pos(rng)];
        const Symbol x = t.w[i], y = t.w[i + 1];
        auto splice = [&](std::vector<Symbol> mid) {
            std::vector<Symbol> w(t.w.begin(), t.w.begin() + static_cast<std::ptrdiff_t>(i));
            w.insert(w.end(), mid.begin(), mid.end());
            w.insert(w.end(), t.w.begin() + static_cast<std::ptrdiff_t>(i + 2), t.w.end());
            return w;
        };
        if (r_of(x) != s_of(y)) continue;  // product is zero
        if (x.kind == Symbol::V) {
            todo.push_back({t.c, splice({y})});
        } else if (y.kind == Symbol::V) {
            todo.push_back({t.c, splice({x})});
        } else if (x.kind == Symbol::G && y.kind == Symbol::E) {
            if (x.idx == y.idx) todo.push_back({t.c, splice({{Symbol::V, edge(x.idx).dst}})});
        } else {
            int v = edge(x.idx).src;
            todo.push_back({t.c, splice({{Symbol::V, v}})});
            for (int f : g.out_edges(v))
                if (f != x.idx) todo.push_back({-t.c, splice({{Symbol::E, f}, {Symbol::G, f}})});
        }
    }
    return result;
}

}  // namespace sgr
