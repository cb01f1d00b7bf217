#pragma once

#include <compare>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "sgr/graph.hpp"
#include "sgr/ring.hpp"

namespace sgr {

// alpha * beta^* with r(alpha) = r(beta) = vertex. Empty alpha and beta
// together denote the vertex idempotent.
struct Monomial {
    std::vector<int> real;
    std::vector<int> ghost;  // beta, stored as a real path
    int vertex = 0;

    int degree() const { return static_cast<int>(real.size()) - static_cast<int>(ghost.size()); }
    auto operator<=>(const Monomial&) const = default;
};

using LpaElement = std::map<Monomial, Scalar>;

// Symbol of a raw word: vertex, real edge or ghost edge.
struct Symbol {
    enum Kind { V, E, G } kind;
    int idx;
};

class LpaRing {
public:
    using Element = LpaElement;
    using Base = LpaRing;

    explicit LpaRing(Graph g);

    const Graph& graph() const { return *graph_; }

    Element zero() const { return {}; }
    Element one() const;
    Element add(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element mul(const Element& a, const Element& b) const;
    Element scale(const Scalar& c, const Element& a) const;
    bool is_zero(const Element& a) const { return a.empty(); }
    bool has_star() const { return true; }
    Element star(const Element& a) const;

    // Generators: vertices, then edges, then ghost edges.
    std::vector<Element> generators() const;
    std::vector<std::string> generator_names() const;
    std::vector<Relation> relations() const;
    Combo words(const Element& a) const;
    std::map<std::string, Scalar> coords(const Element& a) const;
    std::string show(const Element& a) const;
    std::string show_monomial(const Monomial& m) const;

    // Graded-ring view: the principal component L_0 lives in the same ring.
    const LpaRing& base() const { return *this; }
    std::map<int, Element> homogeneous_parts(const Element& a) const;
    Element to_base(const Element& a) const;
    Element from_base(const Element& a) const { return a; }

    Element vertex(int v) const;
    Element edge(int e) const;
    Element ghost(int e) const;
    Element path(const std::vector<int>& p) const;        // real path p
    Element ghost_path(const std::vector<int>& p) const;  // p^*
    Element monomial(const std::vector<int>& alpha, const std::vector<int>& beta) const;
    Element scalar(const Scalar& c) const { return scale(c, one()); }

    // True if every monomial has degree d.
    bool is_homogeneous(const Element& a, int d) const;

    // Normal form of a formal expression such as "e1 e1* + -1/2 e2 e2*".
    // Terms are separated by '+'; a term is an optional scalar followed by
    // symbols (vertex, edge, edge with trailing '*').
    Element parse(const std::string& text) const;
    std::vector<Symbol> parse_symbols(const std::string& text) const;
    Element eval_word(const std::vector<Symbol>& w) const;

    // Independent normalizer: rewrites a raw word by applying the oriented
    // relations at randomly chosen positions until no rule applies.
    Element rewrite_random_order(const std::vector<Symbol>& w, std::mt19937& rng) const;

private:
    int src_of(const std::vector<int>& p, int vertex) const;
    void add_normalized(std::vector<int> alpha, std::vector<int> beta, int vertex, const Scalar& c,
                        Element& out) const;
    void mul_monomials(const Monomial& x, const Monomial& y, const Scalar& c, Element& out) const;

    std::shared_ptr<const Graph> graph_;
};

void add_term(LpaElement& acc, const Monomial& m, const Scalar& c);

}  // namespace sgr
