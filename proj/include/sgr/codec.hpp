#pragma once

// JSON codec. Objects use nlohmann::json, whose std::map storage sorts keys,
// so dump() output is canonical and byte-stable.

#include <algorithm>
#include <string>
#include <type_traits>
#include <variant>

#include "json.hpp"
#include "sgr/cohomology.hpp"
#include "sgr/laurent.hpp"
#include "sgr/leavitt.hpp"
#include "sgr/scalar_matrix_ring.hpp"

namespace sgr::codec {

using json = nlohmann::json;

// --field q rejects scalars with a nonzero imaginary part.
enum class Field { Rational, Gaussian };
void set_field(Field f);
Field field();

json scalar_to(const Scalar& s);
Scalar scalar_from(const json& j);

json graph_to(const Graph& g);
Graph graph_from(const json& j);

json group_to(const GroupModel& g);
GroupModel group_from(const json& j);

using AnyRing = std::variant<LpaRing, LaurentRing, ScalarMatrixRing>;
json ring_to(const LpaRing& r);
json ring_to(const LaurentRing& r);
json ring_to(const ScalarMatrixRing& r);
AnyRing ring_from(const json& j);

json element_to(const LpaRing& r, const LpaElement& a);
json element_to(const LaurentRing& r, const LaurentRing::Element& a);
json element_to(const ScalarMatrixRing& r, const ScalarMatrixRing::Element& a);
LpaElement element_from(const LpaRing& r, const json& j);
LaurentRing::Element element_from(const LaurentRing& r, const json& j);
ScalarMatrixRing::Element element_from(const ScalarMatrixRing& r, const json& j);

json report_to(const Report& rep);

// Wraps nlohmann parse and type errors as InputError("BadJson").
json parse_text(const std::string& text);
json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);

template <class F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw InputError("BadJson", e.what());
    }
}

// ---------------------------------------------------------------- templates

template <Ring R>
json mat_to(const R& r, const Mat<typename R::Element>& m) {
    json entries = json::array();
    for (const auto& e : m.a) entries.push_back(element_to(r, e));
    return {{"rows", m.rows}, {"cols", m.cols}, {"entries", entries}};
}

template <Ring R>
Mat<typename R::Element> mat_from(const R& r, const json& j) {
    return guarded([&] {
        const auto rows = j.at("rows").get<std::size_t>(), cols = j.at("cols").get<std::size_t>();
        const auto& entries = j.at("entries");
        if (entries.size() != rows * cols) throw InputError("DimensionMismatch", "entry count differs from rows*cols");
        Mat<typename R::Element> m(rows, cols, r.zero());
        for (std::size_t k = 0; k < entries.size(); ++k) m.a[k] = element_from(r, entries[k]);
        return m;
    });
}

template <Ring R>
json elements_to(const R& r, const std::vector<typename R::Element>& v) {
    json out = json::array();
    for (const auto& e : v) out.push_back(element_to(r, e));
    return out;
}

template <Ring R>
std::vector<typename R::Element> elements_from(const R& r, const json& j) {
    std::vector<typename R::Element> out;
    guarded([&] {
        for (const auto& e : j) out.push_back(element_from(r, e));
        return 0;
    });
    return out;
}

// Factor system with alpha_g stored as images of the ring generators.
template <Ring R>
json fs_body(const FactorSystem<R>& fs, json alpha) {
    const auto& r = fs.ring;
    auto pairs = [&](const std::map<Pair, Mat<typename R::Element>>& m) {
        json out = json::array();
        for (const auto& [p, w] : m) out.push_back({{"g", p.first}, {"h", p.second}, {"value", mat_to(r, w)}});
        return out;
    };
    return {{"kind", "factor_system"},
            {"ring", ring_to(r)},
            {"group", group_to(fs.group)},
            {"alpha", std::move(alpha)},
            {"omega", pairs(fs.omega)},
            {"omega_tilde", pairs(fs.omega_tilde)},
            {"samples", elements_to(r, fs.samples)}};
}

// LPA systems need their frames: alpha_g lives on L_0, which has no finite
// generating set, so it is stored as r -> x_g r y_g^t.
template <Ring R>
json fs_to(const FactorSystem<R>& fs) {
    if constexpr (std::is_same_v<R, LpaRing>) {
        throw InputError("NotSerializable", "LPA factor systems are serialized together with their frames");
    } else {
        const auto& r = fs.ring;
        json alpha = json::array();
        for (const auto& [g, a] : fs.alpha) {
            json imgs = json::array();
            for (const auto& gen : r.generators()) imgs.push_back(mat_to(r, a(r, gen)));
            alpha.push_back({{"degree", g}, {"unit", mat_to(r, a.unit())}, {"images", imgs}});
        }
        return fs_body(fs, std::move(alpha));
    }
}

json fs_to(const FactorSystem<LpaRing>& fs, const FrameSystem<LpaRing>& fr);
FactorSystem<LpaRing> fs_from(const LpaRing& L, const json& j);
// The frame columns stored in an LPA factor system file.
FrameSystem<LpaRing> fs_frames(const LpaRing& L, const json& j);

template <Ring R>
FactorSystem<R> fs_from(const R& r, const json& j) {
    return guarded([&] {
        FactorSystem<R> fs(r);
        fs.group = group_from(j.at("group"));
        const auto ngen = r.generators().size();
        for (const auto& a : j.at("alpha")) {
            int g = a.at("degree").get<int>();
            if (!fs.group.contains(g)) throw InputError("UnknownDegree", std::to_string(g));
            std::vector<Mat<typename R::Element>> imgs;
            for (const auto& m : a.at("images")) imgs.push_back(mat_from(r, m));
            if (imgs.size() != ngen) throw InputError("DimensionMismatch", "alpha needs one image per generator");
            fs.alpha.emplace(g, AlphaMap<R>::table(std::move(imgs), mat_from(r, a.at("unit"))));
        }
        for (const auto& w : j.at("omega"))
            fs.omega.emplace(Pair{w.at("g").get<int>(), w.at("h").get<int>()}, mat_from(r, w.at("value")));
        for (const auto& w : j.at("omega_tilde"))
            fs.omega_tilde.emplace(Pair{w.at("g").get<int>(), w.at("h").get<int>()}, mat_from(r, w.at("value")));
        if (j.contains("samples")) fs.samples = elements_from(r, j.at("samples"));
        return fs;
    });
}

json frames_to(const LpaRing& L, const LpaFrames& fr);
LpaFrames frames_from(const LpaRing& L, const json& j);

// {"kind": "zero"}, {"kind": "generator_images", "images": {name: element}},
// {"kind": "monomial_rule", "rule": "edge_count_difference", "edge": "e1"}
// {"kind": "monomial_rule", "rule": "degree", "lambda": "1/2"}
// or {"kind": "delta_a", "A": 2x2 matrix} on L(1,2).
Derivation<LpaRing> derivation_from(const LpaRing& L, const json& j);

template <Ring R>
Derivation<R> derivation_from(const R& r, const json& j) {
    return guarded([&] {
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "zero") return Derivation<R>::zero();
        if (kind != "generator_images") throw InputError("UnknownRule", kind + " is not available for this ring");
        auto names = r.generator_names();
        std::vector<typename R::Element> imgs(names.size(), r.zero());
        for (const auto& [name, v] : j.at("images").items()) {
            auto it = std::find(names.begin(), names.end(), name);
            if (it == names.end()) throw InputError("UnknownGenerator", name);
            imgs[static_cast<std::size_t>(it - names.begin())] = element_from(r, v);
        }
        return Derivation<R>::from_images(std::move(imgs));
    });
}

template <Ring R>
json derivation_to(const R& r, const Derivation<R>& d) {
    if (d.is_zero_rule()) return {{"kind", "zero"}};
    if (!d.has_images()) throw InputError("NotSerializable", "rule derivation " + d.name());
    json imgs = json::object();
    auto names = r.generator_names();
    for (std::size_t i = 0; i < names.size(); ++i) imgs[names[i]] = element_to(r, d.images()[i]);
    return {{"kind", "generator_images"}, {"images", imgs}};
}

// "zero" or [{"degree": g, "eta": matrix}, ...]
template <Ring R>
EtaFamily<R> eta_from(const FactorSystem<R>& fs, const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "zero") return zero_eta(fs);
        throw InputError("BadEta", j.get<std::string>());
    }
    return guarded([&] {
        EtaFamily<R> eta;
        for (const auto& e : j) eta.emplace(e.at("degree").get<int>(), mat_from(fs.ring, e.at("eta")));
        return eta;
    });
}

template <Ring R>
json eta_to(const R& r, const EtaFamily<R>& eta) {
    json out = json::array();
    for (const auto& [g, m] : eta) out.push_back({{"degree", g}, {"eta", mat_to(r, m)}});
    return out;
}

template <Ring R>
Witness<R> witness_from(const R& r, const json& j) {
    return guarded([&] {
        Witness<R> w;
        for (const auto& e : j.at("v")) w.v.emplace(e.at("degree").get<int>(), mat_from(r, e.at("value")));
        for (const auto& e : j.at("w")) w.w.emplace(e.at("degree").get<int>(), mat_from(r, e.at("value")));
        return w;
    });
}

template <Ring R>
json witness_to(const R& r, const Witness<R>& w) {
    auto side = [&](const std::map<int, Mat<typename R::Element>>& m) {
        json out = json::array();
        for (const auto& [g, v] : m) out.push_back({{"degree", g}, {"value", mat_to(r, v)}});
        return out;
    };
    return {{"kind", "witness"}, {"v", side(w.v)}, {"w", side(w.w)}};
}

template <Ring R>
json cochain_to(const R& r, const GroupModel& G, const Cochain<typename R::Element>& c) {
    json vals = json::array();
    for (const auto& [t, v] : c.values) {
        json args = json::array();
        for (int g : t) args.push_back(G.name(g));
        vals.push_back({{"args", args}, {"value", element_to(r, v)}});
    }
    return {{"degree", c.degree}, {"values", vals}};
}

}  // namespace sgr::codec
