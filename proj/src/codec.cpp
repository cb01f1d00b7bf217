#include "sgr/codec.hpp"

#include "sgr/l12.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sgr::codec {

namespace {

Field g_field = Field::Gaussian;

mpq_class parse_rational(const std::string& s) {
    if (s.empty() || s == "+" || s == "-") return mpq_class(s == "-" ? -1 : 1);
    std::string t = s[0] == '+' ? s.substr(1) : s;
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw InputError("BadScalar", s);
    q.canonicalize();
    return q;
}

std::string word_of(const LpaRing& L, const Monomial& m) {
    const auto& g = L.graph();
    if (m.real.empty() && m.ghost.empty()) return g.vertices()[static_cast<std::size_t>(m.vertex)];
    std::string s;
    auto push = [&](const std::string& tok) {
        if (!s.empty()) s += ' ';
        s += tok;
    };
    for (int e : m.real) push(g.edges()[static_cast<std::size_t>(e)].name);
    for (auto it = m.ghost.rbegin(); it != m.ghost.rend(); ++it) push(g.edges()[static_cast<std::size_t>(*it)].name + "*");
    return s;
}

const char* star_name(LaurentRing::Star s) {
    switch (s) {
        case LaurentRing::Star::None: return "none";
        case LaurentRing::Star::Inverse: return "inverse";
        case LaurentRing::Star::NegInverse: return "neg_inverse";
    }
    return "none";
}

}  // namespace

void set_field(Field f) { g_field = f; }
Field field() { return g_field; }

json scalar_to(const Scalar& s) { return s.str(); }

// Accepts integers and the str() forms "a", "a/b", "bi", "a+bi", "a-bi".
Scalar scalar_from(const json& j) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (!j.is_string()) throw InputError("BadScalar", j.dump());
    std::string s = j.get<std::string>();
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.empty()) throw InputError("BadScalar", "empty");
    Scalar out;
    if (s.back() != 'i') {
        out = Scalar(parse_rational(s));
    } else {
        std::string body = s.substr(0, s.size() - 1);
        std::size_t split = std::string::npos;
        for (std::size_t k = body.size(); k-- > 1;)
            if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
                split = k;
                break;
            }
        if (split == std::string::npos)
            out = Scalar(mpq_class(0), parse_rational(body));
        else
            out = Scalar(parse_rational(body.substr(0, split)), parse_rational(body.substr(split)));
    }
    if (g_field == Field::Rational && !out.is_real()) throw InputError("FieldViolation", s + " is not rational");
    return out;
}

json graph_to(const Graph& g) {
    json edges = json::array();
    for (const auto& e : g.edges())
        edges.push_back({{"name", e.name},
                         {"source", g.vertices()[static_cast<std::size_t>(e.src)]},
                         {"range", g.vertices()[static_cast<std::size_t>(e.dst)]}});
    return {{"vertices", g.vertices()}, {"edges", edges}};
}

Graph graph_from(const json& j) {
    return guarded([&] {
        std::vector<std::tuple<std::string, std::string, std::string>> edges;
        for (const auto& e : j.at("edges"))
            edges.emplace_back(e.at("name").get<std::string>(), e.at("source").get<std::string>(),
                               e.at("range").get<std::string>());
        return Graph::from_names(j.at("vertices").get<std::vector<std::string>>(), edges);
    });
}

json group_to(const GroupModel& g) {
    if (g.is_window()) return {{"kind", "window"}, {"bound", g.bound()}};
    std::vector<std::string> names;
    for (int x : g.elements()) names.push_back(g.name(x));
    return {{"kind", "finite"}, {"table", g.table()}, {"names", names}};
}

GroupModel group_from(const json& j) {
    return guarded([&] {
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "window") return GroupModel::integer_window(j.at("bound").get<int>());
        if (kind == "cyclic") return GroupModel::cyclic(j.at("order").get<int>());
        if (kind == "finite")
            return GroupModel::finite(j.at("table").get<std::vector<std::vector<int>>>(),
                                      j.value("names", std::vector<std::string>{}));
        throw InputError("BadGroup", kind);
    });
}

json ring_to(const LpaRing& r) { return {{"kind", "lpa"}, {"graph", graph_to(r.graph())}}; }
json ring_to(const LaurentRing& r) {
    return {{"kind", "laurent"}, {"vars", r.vars()}, {"star", star_name(r.star_kind())}};
}
json ring_to(const ScalarMatrixRing& r) {
    return {{"kind", "matrix"}, {"size", r.dim()}, {"diagonal", r.diagonal()}};
}

AnyRing ring_from(const json& j) {
    return guarded([&]() -> AnyRing {
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "lpa") return LpaRing(graph_from(j.at("graph")));
        if (kind == "laurent") {
            auto star = j.value("star", std::string("none"));
            LaurentRing::Star s = star == "inverse"       ? LaurentRing::Star::Inverse
                                  : star == "neg_inverse" ? LaurentRing::Star::NegInverse
                                  : star == "none"        ? LaurentRing::Star::None
                                                          : throw InputError("BadRing", "star " + star);
            return LaurentRing(j.at("vars").get<std::vector<std::string>>(), s);
        }
        if (kind == "matrix") return ScalarMatrixRing(j.at("size").get<std::size_t>(), j.value("diagonal", false));
        throw InputError("BadRing", kind);
    });
}

json element_to(const LpaRing& r, const LpaElement& a) {
    json out = json::array();
    for (const auto& [m, c] : a) out.push_back({scalar_to(c), word_of(r, m)});
    return out;
}

json element_to(const LaurentRing&, const LaurentRing::Element& a) {
    json out = json::array();
    for (const auto& [e, c] : a) out.push_back({scalar_to(c), e});
    return out;
}

json element_to(const ScalarMatrixRing&, const ScalarMatrixRing::Element& a) {
    json out = json::array();
    for (const auto& c : a) out.push_back(scalar_to(c));
    return out;
}

// Terms [coefficient, word]; a plain string goes through the ring parser.
LpaElement element_from(const LpaRing& r, const json& j) {
    return guarded([&] {
        if (j.is_string()) {
            auto a = r.parse(j.get<std::string>());
            if (g_field == Field::Rational)
                for (const auto& [m, c] : a)
                    if (!c.is_real()) throw InputError("FieldViolation", r.show(a));
            return a;
        }
        LpaElement out;
        for (const auto& t : j) out = r.add(out, r.scale(scalar_from(t.at(0)), r.eval_word(r.parse_symbols(t.at(1)))));
        return out;
    });
}

LaurentRing::Element element_from(const LaurentRing& r, const json& j) {
    return guarded([&] {
        if (j.is_string()) return r.parse(j.get<std::string>());
        LaurentRing::Element out;
        for (const auto& t : j) {
            auto e = t.at(1).get<LaurentRing::Exponent>();
            if (e.size() != r.nvars()) throw InputError("DimensionMismatch", "exponent length");
            out = r.add(out, r.monomial(e, scalar_from(t.at(0))));
        }
        return out;
    });
}

ScalarMatrixRing::Element element_from(const ScalarMatrixRing& r, const json& j) {
    return guarded([&] {
        if (j.size() != r.dim() * r.dim()) throw InputError("DimensionMismatch", "matrix entry count");
        ScalarMatrixRing::Element out;
        for (const auto& c : j) out.push_back(scalar_from(c));
        if (r.diagonal())
            for (std::size_t i = 0; i < r.dim(); ++i)
                for (std::size_t k = 0; k < r.dim(); ++k)
                    if (i != k && !out[i * r.dim() + k].is_zero()) throw InputError("NotDiagonal", j.dump());
        return out;
    });
}

json report_to(const Report& rep) {
    json checks = json::array();
    std::size_t failed = 0;
    for (const auto& c : rep.checks()) {
        checks.push_back({{"tag", c.tag}, {"pass", c.pass}, {"detail", c.detail}});
        failed += !c.pass;
    }
    return {{"ok", rep.ok()}, {"checks", checks}, {"failed", failed}};
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InputError("BadJson", e.what());
    }
}

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("IoError", "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
}

void write_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("IoError", "cannot write " + path);
    out << j.dump(2) << '\n';
    if (!out) throw InputError("IoError", "write failed for " + path);
}

json frames_to(const LpaRing& L, const LpaFrames& fr) {
    json cols = json::array();
    for (const auto& [g, f] : fr.cols)
        cols.push_back({{"degree", g}, {"x", elements_to(L, f.x.a)}, {"y", elements_to(L, f.y.a)}});
    return {{"kind", "frames"}, {"ring", ring_to(L)}, {"group", group_to(fr.group)}, {"frames", cols}};
}

LpaFrames frames_from(const LpaRing& L, const json& j) {
    return guarded([&] {
        LpaFrames fr;
        fr.group = group_from(j.at("group"));
        for (const auto& c : j.at("frames")) {
            LpaFrame f;
            f.degree = c.at("degree").get<int>();
            auto x = elements_from(L, c.at("x")), y = elements_from(L, c.at("y"));
            f.x = Mat<LpaElement>(x.size(), 1, L.zero());
            f.y = Mat<LpaElement>(y.size(), 1, L.zero());
            f.x.a = std::move(x);
            f.y.a = std::move(y);
            fr.cols.emplace(f.degree, std::move(f));
        }
        check_frames(L, fr);
        return fr;
    });
}

json fs_to(const FactorSystem<LpaRing>& fs, const LpaFrames& fr) {
    const auto& L = fs.ring;
    json alpha = json::array();
    for (const auto& [g, a] : fs.alpha) {
        const auto& f = fr.at(g);
        alpha.push_back({{"degree", g}, {"unit", mat_to(L, a.unit())}, {"x", elements_to(L, f.x.a)}, {"y", elements_to(L, f.y.a)}});
    }
    return fs_body(fs, std::move(alpha));
}

LpaFrames fs_frames(const LpaRing& L, const json& j) {
    return guarded([&] {
        json fj = {{"group", j.at("group")}, {"frames", j.at("alpha")}};
        for (const auto& a : j.at("alpha"))
            if (!a.contains("x") || !a.contains("y"))
                throw InputError("BadFactorSystem", "LPA alpha entries need frame columns x and y");
        return frames_from(L, fj);
    });
}

// alpha from the stored frames; omega and omega~ are taken as given so that
// verify-fs checks the file contents.
FactorSystem<LpaRing> fs_from(const LpaRing& L, const json& j) {
    return guarded([&] {
        auto fr = fs_frames(L, j);
        auto ex = extract_factor_system(L, fr);
        FactorSystem<LpaRing> fs(L);
        fs.group = fr.group;
        for (const auto& a : j.at("alpha")) {
            int g = a.at("degree").get<int>();
            auto unit = mat_from(L, a.at("unit"));
            if (!(unit == ex.alpha_one(g))) throw InputError("BadFactorSystem", "alpha unit differs from x y^t");
            fs.alpha.emplace(g, ex.alpha.at(g));
        }
        for (const auto& w : j.at("omega"))
            fs.omega.emplace(Pair{w.at("g").get<int>(), w.at("h").get<int>()}, mat_from(L, w.at("value")));
        for (const auto& w : j.at("omega_tilde"))
            fs.omega_tilde.emplace(Pair{w.at("g").get<int>(), w.at("h").get<int>()}, mat_from(L, w.at("value")));
        if (j.contains("samples")) fs.samples = elements_from(L, j.at("samples"));
        return fs;
    });
}

Derivation<LpaRing> derivation_from(const LpaRing& L, const json& j) {
    return guarded([&] {
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "delta_a") return delta_a_build(L, mat_from(L, j.at("A")));
        if (kind != "monomial_rule") return derivation_from<LpaRing>(L, j);
        const auto rule = j.at("rule").get<std::string>();
        if (rule == "edge_count_difference") {
            int e = L.graph().edge_index(j.at("edge").get<std::string>());
            if (e < 0) throw InputError("UnknownEdge", j.at("edge").get<std::string>());
            return edge_count_rule(L, e);
        }
        if (rule == "degree") return degree_rule(L, scalar_from(j.at("lambda")));
        throw InputError("UnknownRule", rule);
    });
}

}  // namespace sgr::codec
