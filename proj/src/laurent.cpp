#include "sgr/laurent.hpp"

#include <sstream>

#include "sgr/errors.hpp"

namespace sgr {

namespace {

void add_into(LaurentRing::Element& acc, const LaurentRing::Exponent& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, ins] = acc.emplace(e, c);
    if (!ins) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

}  // namespace

LaurentRing::LaurentRing(std::vector<std::string> vars, Star star) : vars_(std::move(vars)), star_(star) {
    if (vars_.empty()) throw InputError("BadRing", "Laurent ring needs at least one variable");
}

LaurentRing::Element LaurentRing::add(const Element& a, const Element& b) const {
    Element out = a;
    for (const auto& [e, c] : b) add_into(out, e, c);
    return out;
}

LaurentRing::Element LaurentRing::neg(const Element& a) const {
    Element out = a;
    for (auto& [e, c] : out) c = -c;
    return out;
}

LaurentRing::Element LaurentRing::mul(const Element& a, const Element& b) const {
    Element out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exponent e(nvars());
            for (std::size_t i = 0; i < nvars(); ++i) e[i] = ea[i] + eb[i];
            add_into(out, e, ca * cb);
        }
    return out;
}

LaurentRing::Element LaurentRing::scale(const Scalar& c, const Element& a) const {
    if (c.is_zero()) return {};
    Element out = a;
    for (auto& [e, v] : out) v *= c;
    return out;
}

LaurentRing::Element LaurentRing::star(const Element& a) const {
    if (star_ == Star::None) throw InputError("MissingInvolution", "Laurent ring declared without star");
    Element out;
    for (const auto& [e, c] : a) {
        Exponent f(nvars());
        int total = 0;
        for (std::size_t i = 0; i < nvars(); ++i) {
            f[i] = -e[i];
            total += e[i];
        }
        Scalar v = c.conj();
        if (star_ == Star::NegInverse && (total % 2 != 0)) v = -v;
        add_into(out, f, v);
    }
    return out;
}

LaurentRing::Element LaurentRing::monomial(const Exponent& e, const Scalar& c) const {
    if (e.size() != nvars()) throw InputError("DimensionMismatch", "exponent length");
    Element out;
    add_into(out, e, c);
    return out;
}

LaurentRing::Element LaurentRing::var(std::size_t i, int power) const {
    Exponent e(nvars(), 0);
    e.at(i) = power;
    return monomial(e);
}

std::vector<LaurentRing::Element> LaurentRing::generators() const {
    std::vector<Element> g;
    for (std::size_t i = 0; i < nvars(); ++i) {
        g.push_back(var(i, 1));
        g.push_back(var(i, -1));
    }
    return g;
}

std::vector<std::string> LaurentRing::generator_names() const {
    std::vector<std::string> n;
    for (const auto& v : vars_) {
        n.push_back(v);
        n.push_back(v + "^-1");
    }
    return n;
}

std::vector<Relation> LaurentRing::relations() const {
    std::vector<Relation> rel;
    const int m = static_cast<int>(nvars());
    for (int i = 0; i < m; ++i) {
        rel.push_back({{{1, {2 * i, 2 * i + 1}}}, {{1, {}}}});
        rel.push_back({{{1, {2 * i + 1, 2 * i}}}, {{1, {}}}});
        for (int j = i + 1; j < m; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    rel.push_back({{{1, {2 * i + a, 2 * j + b}}}, {{1, {2 * j + b, 2 * i + a}}}});
    }
    return rel;
}

Combo LaurentRing::words(const Element& a) const {
    Combo out;
    for (const auto& [e, c] : a) {
        std::vector<int> w;
        for (std::size_t i = 0; i < nvars(); ++i) {
            int g = e[i] >= 0 ? static_cast<int>(2 * i) : static_cast<int>(2 * i + 1);
            for (int k = 0; k < std::abs(e[i]); ++k) w.push_back(g);
        }
        out.push_back({c, std::move(w)});
    }
    return out;
}

std::map<std::string, Scalar> LaurentRing::coords(const Element& a) const {
    std::map<std::string, Scalar> out;
    for (const auto& [e, c] : a) {
        std::string k;
        for (int x : e) k += std::to_string(x) + ",";
        out.emplace(k, c);
    }
    return out;
}

std::string LaurentRing::show(const Element& a) const {
    if (a.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : a) {
        if (!first) s += " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < nvars(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += " ";
            mono += vars_[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            s += c.is_real() ? c.str() : "(" + c.str() + ")";
        } else {
            if (!c.is_one()) s += (c.is_real() ? c.str() : "(" + c.str() + ")") + " ";
            s += mono;
        }
    }
    return s;
}

LaurentRing::Element LaurentRing::parse(const std::string& text) const {
    Element acc;
    std::stringstream terms(text);
    std::string term;
    while (std::getline(terms, term, '+')) {
        std::istringstream is(term);
        std::string tok;
        Exponent e(nvars(), 0);
        Scalar c = 1;
        bool any = false;
        while (is >> tok) {
            any = true;
            auto caret = tok.find('^');
            std::string name = tok.substr(0, caret);
            std::size_t vi = nvars();
            for (std::size_t i = 0; i < nvars(); ++i)
                if (vars_[i] == name) vi = i;
            if (vi == nvars()) {
                try {
                    if (!tok.empty() && tok.back() == 'i') {
                        std::string n = tok.substr(0, tok.size() - 1);
                        c *= Scalar(mpq_class(0), n.empty() ? mpq_class(1) : (n == "-" ? mpq_class(-1) : mpq_class(n)));
                    } else {
                        c *= Scalar(mpq_class(tok));
                    }
                } catch (const std::invalid_argument&) {
                    throw InputError("UnknownSymbol", tok);
                }
                continue;
            }
            e[vi] += caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
        }
        if (any) add_into(acc, e, c);
    }
    return acc;
}

LaurentRing::Element LaurentRing::substitute(const Element& a, const std::vector<Element>& var_images) const {
    if (var_images.size() != nvars()) throw InputError("DimensionMismatch", "substitution arity");
    std::vector<Element> inv;
    for (const auto& im : var_images) {
        if (im.size() != 1) throw InputError("NotInvertible", "substitution image must be a unit monomial");
        const auto& [e, c] = *im.begin();
        Exponent f(nvars());
        for (std::size_t i = 0; i < nvars(); ++i) f[i] = -e[i];
        inv.push_back(monomial(f, c.inverse()));
    }
    Element out;
    for (const auto& [e, c] : a) {
        Element t = scalar(c);
        for (std::size_t i = 0; i < nvars(); ++i)
            for (int k = 0; k < std::abs(e[i]); ++k) t = mul(t, e[i] > 0 ? var_images[i] : inv[i]);
        out = add(out, t);
    }
    return out;
}

}  // namespace sgr
