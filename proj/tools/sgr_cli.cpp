// sgr-cli: batch front end. One subcommand per process, JSON report on
// stdout. Exit 0 pass, 1 verified mathematical failure, 2 input error.

#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "sgr/atiyah.hpp"
#include "sgr/codec.hpp"
#include "sgr/l12.hpp"
#include "sgr/reconstruct.hpp"

using namespace sgr;
using codec::json;

namespace {

struct Options {
    std::optional<int> window;
    std::string field;
    std::string session;
    bool json_mode = true;

    std::string graph, frames, fs, fs_b, witness, derivation, eta = "zero", eta1 = "zero", out;
    std::string frame_kind = "edge-power";
    std::string center, crossed_hom, section, a_matrix, b_matrix;
    int level = 2;
};

// Resolves "@name" through the session manifest; plain paths pass through.
class Session {
public:
    void load(const std::string& path) {
        if (path.empty()) return;
        manifest_ = codec::read_file(path);
        base_ = std::filesystem::path(path).parent_path();
    }
    std::string resolve(const std::string& ref) const {
        if (ref.empty() || ref[0] != '@') return ref;
        const auto name = ref.substr(1);
        if (!manifest_.contains("resources") || !manifest_["resources"].contains(name))
            throw InputError("UnknownResource", name);
        std::filesystem::path p = manifest_["resources"][name].get<std::string>();
        return p.is_absolute() ? p.string() : (base_ / p).string();
    }
    std::optional<int> window() const {
        if (manifest_.contains("window")) return manifest_["window"].get<int>();
        return std::nullopt;
    }
    std::string field() const { return manifest_.value("field", std::string()); }

private:
    json manifest_ = json::object();
    std::filesystem::path base_;
};

Options opt;
Session session;

json load(const std::string& ref) {
    if (ref.empty()) throw InputError("MissingArgument", "a required file argument is empty");
    return codec::read_file(session.resolve(ref));
}

int require_window() {
    if (!opt.window) throw InputError("WindowRequired", "--window N is required for Z-graded sessions");
    if (*opt.window < 1) throw InputError("BadWindow", "window bound must be >= 1");
    return *opt.window;
}

void check_group_window(const GroupModel& G) {
    if (!G.is_window()) return;
    if (require_window() != G.bound())
        throw InputError("WindowMismatch",
                         "--window " + std::to_string(*opt.window) + " but the input covers " + std::to_string(G.bound()));
}

json report_json(const std::string& command, const Report& rep) {
    auto j = codec::report_to(rep);
    j["command"] = command;
    return j;
}

template <GradedRing S>
std::vector<typename S::Base::Element> base_samples(const FactorSystem<typename S::Base>& fs) {
    auto out = fs.test_elements();
    out.push_back(fs.ring.one());
    return out;
}

// Frame entries with their degrees: x_g in degree g, y_g in degree g^-1.
template <GradedRing S>
std::vector<std::pair<int, typename S::Element>> frame_entries(const FrameSystem<S>& fr) {
    std::vector<std::pair<int, typename S::Element>> out;
    for (const auto& [g, f] : fr.cols)
        for (std::size_t i = 0; i < f.size(); ++i) {
            out.emplace_back(g, f.x(i, 0));
            out.emplace_back(fr.group.inv(g), f.y(i, 0));
        }
    return out;
}

// Runs body(S, frames, factor system) on either LPA frames or a factor
// system reconstructed into its canonical graded ring.
template <class F>
json with_context(F&& body) {
    if (!opt.frames.empty() || !opt.graph.empty()) {
        LpaRing L(Graph::l12());
        LpaFrames fr;
        if (!opt.frames.empty()) {
            auto j = load(opt.frames);
            L = std::get<LpaRing>(codec::ring_from(j.at("ring")));
            fr = codec::frames_from(L, j);
        } else {
            L = LpaRing(codec::graph_from(load(opt.graph)));
            auto kind = opt.frame_kind == "parseval" ? PositiveFrames::Parseval : PositiveFrames::EdgePower;
            fr = lpa_frames(L, require_window(), kind);
        }
        check_group_window(fr.group);
        auto fs = extract_factor_system(L, fr);
        fs.samples = l0_spanning(L, 1);
        return body(L, fr, fs);
    }
    if (opt.fs.empty()) throw InputError("MissingArgument", "one of --frames, --graph or --fs is required");
    auto j = load(opt.fs);
    auto ring = codec::ring_from(j.at("ring"));
    return std::visit(
        [&]<class R>(const R& r) {
            auto fs = codec::fs_from(r, j);
            check_group_window(fs.group);
            if constexpr (std::is_same_v<R, LpaRing>) {
                // LPA systems carry their frames; work in the path algebra itself
                return body(r, codec::fs_frames(r, j), fs);
            } else {
                auto S = reconstruct_ring(fs);
                auto fr = canonical_frames(S);
                return body(S, fr, fs);
            }
        },
        ring);
}

// "induced" reads eta(g) = d(x_g) y_g^t off a rule that is already defined
// on the whole path algebra; the lifting conditions are still checked.
template <GradedRing S>
EtaFamily<typename S::Base> induced_eta(const S& s, const FrameSystem<S>& fr, const Derivation<typename S::Base>& d) {
    if constexpr (std::is_same_v<S, LpaRing>) {
        return eta_from_lift(s, fr, graded_from_rule<LpaRing>([s, d](const LpaElement& x) { return d(s, x); }));
    } else {
        throw InputError("NotAvailable", "induced eta needs an LPA session");
    }
}

template <GradedRing S>
EtaFamily<typename S::Base> eta_value(const S& s, const FrameSystem<S>& fr, const FactorSystem<typename S::Base>& fs,
                                      const Derivation<typename S::Base>& d, json j) {
    if (j.is_string() && j.get<std::string>() == "induced") return induced_eta(s, fr, d);
    if (j.is_object() && j.contains("eta")) j = j["eta"];
    return codec::eta_from(fs, j);
}

template <GradedRing S>
EtaFamily<typename S::Base> load_eta(const S& s, const FrameSystem<S>& fr, const FactorSystem<typename S::Base>& fs,
                                     const Derivation<typename S::Base>& d) {
    if (opt.eta == "zero" || opt.eta == "induced") return eta_value(s, fr, fs, d, opt.eta);
    return eta_value(s, fr, fs, d, load(opt.eta));
}

template <Ring R>
Derivation<R> load_derivation(const R& r) {
    if (opt.derivation.empty()) throw InputError("MissingArgument", "--derivation is required");
    auto j = load(opt.derivation);
    if (j.contains("derivation")) j = j["derivation"];
    return codec::derivation_from(r, j);
}

template <Ring R>
std::vector<typename R::Element> center_window(const R& r) {
    if (opt.center.empty()) return {r.one()};
    return codec::elements_from(r, load(opt.center));
}

// ---------------------------------------------------------------- commands

json cmd_frames() {
    LpaRing L(codec::graph_from(load(opt.graph)));
    auto kind = opt.frame_kind == "parseval" ? PositiveFrames::Parseval : PositiveFrames::EdgePower;
    auto fr = lpa_frames(L, require_window(), kind);
    Report rep;
    json ranks = json::object();
    for (const auto& [g, f] : fr.cols) {
        auto ytx = mat::mul(L, mat::transpose(f.y), f.x);
        rep.add("frame:ytx=1", ytx == mat::identity(L, 1), fr.group.name(g));
        ranks[fr.group.name(g)] = f.size();
    }
    auto j = report_json("frames", rep);
    j["ranks"] = ranks;
    if (!opt.out.empty()) codec::write_file(opt.out, codec::frames_to(L, fr));
    return j;
}

json cmd_extract() {
    return with_context([]<class S>(const S&, const FrameSystem<S>& fr, const FactorSystem<typename S::Base>& fs) {
        Report rep;
        json ranks = json::object();
        for (const auto& [g, a] : fs.alpha) {
            ranks[fs.group.name(g)] = a.size();
            rep.add("extracted", true, fs.group.name(g));
        }
        auto j = report_json("extract", rep);
        j["ranks"] = ranks;
        if (!opt.out.empty()) {
            if constexpr (std::is_same_v<S, LpaRing>)
                codec::write_file(opt.out, codec::fs_to(fs, fr));
            else
                codec::write_file(opt.out, codec::fs_to(fs));
        }
        return j;
    });
}

template <class F>
json with_fs(F&& body) {
    if (opt.fs.empty()) throw InputError("MissingArgument", "--fs is required");
    auto j = load(opt.fs);
    return std::visit(
        [&](const auto& R) {
            auto fs = codec::fs_from(R, j);
            check_group_window(fs.group);
            return body(fs);
        },
        codec::ring_from(j.at("ring")));
}

json cmd_verify_fs() {
    return with_fs([](const auto& fs) { return report_json("verify-fs", verify_axioms(fs)); });
}

json cmd_reconstruct() {
    return with_fs([](const auto& fs) {
        auto S = reconstruct_ring(fs);
        auto fr = canonical_frames(S);
        Report rep;
        for (const auto& [g, f] : fr.cols) {
            bool ok = true;
            try {
                check_frame(S, fr.group, f);
            } catch (const MathError&) {
                ok = false;
            }
            rep.add("frame:ytx=1", ok, fr.group.name(g));
        }
        rep.merge(associativity_check(S, fr, fs.test_elements()));
        rep.merge(compare_systems(fs, extract_factor_system(S, fr)), "round_trip:");
        auto j = report_json("reconstruct", rep);
        if (!opt.out.empty()) codec::write_file(opt.out, codec::fs_to(extract_factor_system(S, fr)));
        return j;
    });
}

json cmd_conjugacy() {
    return with_fs([](const auto& A) {
        using R = std::decay_t<decltype(A.ring)>;
        auto wit = codec::witness_from(A.ring, load(opt.witness));
        Report rep;
        json j;
        if (!opt.fs_b.empty()) {
            auto B = codec::fs_from(A.ring, load(opt.fs_b));
            rep = verify_conjugacy(A, B, wit);
            j = report_json("conjugacy", rep);
        } else {
            FactorSystem<R> B = conjugacy_transform(A, wit);
            rep.merge(verify_axioms(B), "transformed:");
            rep.merge(verify_conjugacy(A, B, wit));
            j = report_json("conjugacy", rep);
            if (!opt.out.empty()) codec::write_file(opt.out, codec::fs_to(B));
        }
        return j;
    });
}

json cmd_lift_check() {
    return with_context([]<class S>(const S& s, const FrameSystem<S>& fr, const FactorSystem<typename S::Base>& fs) {
        auto d = load_derivation(fs.ring);
        auto eta = load_eta(s, fr, fs, d);
        return report_json("lift-check", check_lift_conditions(fs, d, eta));
    });
}

template <GradedRing S>
json generator_images(const S& s, const GradedDerivation<S>& D) {
    json imgs = json::object();
    auto gens = s.generators();
    auto names = s.generator_names();
    for (std::size_t i = 0; i < gens.size(); ++i) imgs[names[i]] = s.show(D(gens[i]));
    return imgs;
}

template <GradedRing S>
Report lift_property_report(const S& s, const FrameSystem<S>& fr, const FactorSystem<typename S::Base>& fs,
                            const GradedDerivation<S>& D, const Derivation<typename S::Base>& d) {
    auto entries = frame_entries(fr);
    std::vector<std::pair<typename S::Element, typename S::Element>> pairs;
    for (const auto& [g, a] : entries)
        for (const auto& [h, b] : entries)
            if (fr.group.mul(g, h)) pairs.emplace_back(a, b);
    Report rep = leibniz_report(s, D, pairs);
    rep.merge(lift_restriction_report(s, D, d, base_samples<S>(fs), entries));
    return rep;
}

json cmd_lift_build() {
    return with_context([]<class S>(const S& s, const FrameSystem<S>& fr, const FactorSystem<typename S::Base>& fs) {
        auto d = load_derivation(fs.ring);
        auto eta = load_eta(s, fr, fs, d);
        auto D = build_lift(s, fr, fs, d, eta);
        auto j = report_json("lift-build", lift_property_report(s, fr, fs, D, d));
        j["images"] = generator_images(s, D);
        if (!opt.out.empty())
            codec::write_file(opt.out, {{"kind", "lift"},
                                        {"derivation", load(opt.derivation)},
                                        {"eta", codec::eta_to(fs.ring, canonical_eta(fs, eta))}});
        return j;
    });
}

json cmd_z_lift() {
    return with_context([]<class S>(const S& s, const FrameSystem<S>& fr, const FactorSystem<typename S::Base>& fs) {
        const auto& R = fs.ring;
        auto d = load_derivation(R);
        auto eta1 = opt.eta1 == "zero" ? mat::zeros(R, fs.n(1), fs.n(1)) : codec::mat_from(R, load(opt.eta1));
        auto eta = z_lift_eta(s, fr, fs, d, eta1, {});
        Report rep = check_lift_conditions(fs, d, eta);
        auto D = unchecked_lift(s, fr, d, eta);
        rep.merge(lift_property_report(s, fr, fs, D, d));
        auto j = report_json("z-lift", rep);
        j["eta"] = codec::eta_to(R, eta);
        j["images"] = generator_images(s, D);
        if (!opt.out.empty()) codec::write_file(opt.out, {{"kind", "eta"}, {"eta", codec::eta_to(R, eta)}});
        return j;
    });
}

json cmd_defect() {
    return with_context([]<class S>(const S& s, const FrameSystem<S>& fr, const FactorSystem<typename S::Base>& fs) {
        const auto& R = fs.ring;
        auto d = load_derivation(R);
        auto eta = canonical_eta(fs, load_eta(s, fr, fs, d));
        auto delta = defect_cochain(s, fr, fs, d, eta);
        auto rep = cocycle_check(R, fs.group, frame_action(s, fr), delta);
        bool zero = true;
        for (const auto& [t, v] : delta.values) zero = zero && R.is_zero(v);
        auto j = report_json("defect", rep);
        j["delta"] = codec::cochain_to(R, fs.group, delta);
        j["vanishes"] = zero;
        return j;
    });
}

json cmd_cohomology_solve() {
    return with_context([]<class S>(const S& s, const FrameSystem<S>& fr, const FactorSystem<typename S::Base>& fs) {
        const auto& R = fs.ring;
        auto d = load_derivation(R);
        auto eta = canonical_eta(fs, load_eta(s, fr, fs, d));
        auto outcome = lift_via_cohomology(s, fr, fs, d, eta, center_basis(R, center_window(R)));
        Report rep = cocycle_check(R, fs.group, frame_action(s, fr), outcome.delta);
        json j;
        if (!outcome.xi) {
            rep.add("coboundary", false, outcome.obstruction);
            j = report_json("cohomology-solve", rep);
        } else {
            rep.add("coboundary", true);
            rep.merge(check_lift_conditions(fs, d, outcome.eta), "shifted:");
            j = report_json("cohomology-solve", rep);
            j["xi"] = codec::cochain_to(R, fs.group, *outcome.xi);
            j["eta"] = codec::eta_to(R, outcome.eta);
            if (!opt.out.empty()) codec::write_file(opt.out, {{"kind", "eta"}, {"eta", codec::eta_to(R, outcome.eta)}});
        }
        j["delta"] = codec::cochain_to(R, fs.group, outcome.delta);
        return j;
    });
}

// [{"degree": g, "value": element}, ...]
template <Ring R>
std::map<int, typename R::Element> load_crossed_hom(const R& r, const GroupModel& G) {
    std::map<int, typename R::Element> out;
    codec::guarded([&] {
        for (const auto& e : load(opt.crossed_hom)) {
            int g = e.at("degree").get<int>();
            if (!G.contains(g)) throw InputError("UnknownDegree", std::to_string(g));
            out.emplace(g, codec::element_from(r, e.at("value")));
        }
        return 0;
    });
    for (int g : G.elements())
        if (!out.count(g)) throw InputError("MissingValue", "no value for degree " + G.name(g));
    return out;
}

json cmd_gauge() {
    return with_context([]<class S>(const S& s, const FrameSystem<S>& fr, const FactorSystem<typename S::Base>& fs) {
        const auto& R = fs.ring;
        auto eta = load_crossed_hom(R, fs.group);
        auto window = base_samples<S>(fs);
        auto rep = crossed_hom_check(R, fs.group, frame_action(s, fr), eta, window);
        auto j = json::object();
        if (rep.ok()) {
            auto D = gauge_from_crossed_hom(s, fr, eta, window);
            auto back = crossed_hom_from_gauge(s, fr, D, window);
            for (const auto& [g, v] : eta) rep.add("round_trip", back.at(g) == v, fs.group.name(g));
            rep.merge(leibniz_report(s, D, [&] {
                std::vector<std::pair<typename S::Element, typename S::Element>> pairs;
                for (const auto& [g, a] : frame_entries(fr))
                    for (const auto& [h, b] : frame_entries(fr))
                        if (fr.group.mul(g, h)) pairs.emplace_back(a, b);
                return pairs;
            }()));
            j = report_json("gauge", rep);
            j["images"] = generator_images(s, D);
        } else {
            j = report_json("gauge", rep);
        }
        return j;
    });
}

// {"names": [...], "structure_constants": c[i][j][k],
//  "members": [{"derivation": ..., "eta": "zero" | [...]}, ...]}
template <GradedRing S>
LieBasisSection<S> load_section(const S& s, const FrameSystem<S>& fr, const FactorSystem<typename S::Base>& fs) {
    auto j = load(opt.section);
    LieBasisSection<S> sec;
    codec::guarded([&] {
        const auto& members = j.at("members");
        const std::size_t d = members.size();
        sec.names = j.value("names", std::vector<std::string>{});
        for (std::size_t i = sec.names.size(); i < d; ++i) sec.names.push_back("d" + std::to_string(i));
        sec.c = LieBasisSection<S>::abelian(d);
        if (j.contains("structure_constants")) {
            const auto& c = j.at("structure_constants");
            if (c.size() != d) throw InputError("DimensionMismatch", "structure constants");
            for (std::size_t a = 0; a < d; ++a) {
                if (c[a].size() != d) throw InputError("DimensionMismatch", "structure constants");
                for (std::size_t b = 0; b < d; ++b) {
                    if (c[a][b].size() != d) throw InputError("DimensionMismatch", "structure constants");
                    for (std::size_t k = 0; k < d; ++k) sec.c[a][b][k] = codec::scalar_from(c[a][b][k]);
                }
            }
        }
        for (const auto& m : members) {
            auto d_i = codec::derivation_from(fs.ring, m.at("derivation"));
            auto eta = eta_value(s, fr, fs, d_i, m.value("eta", json("zero")));
            sec.derivations.push_back(d_i);
            sec.lifts.push_back(build_lift(s, fr, fs, d_i, eta));
        }
        return 0;
    });
    return sec;
}

json cmd_atiyah() {
    return with_context([]<class S>(const S& s, const FrameSystem<S>& fr, const FactorSystem<typename S::Base>& fs) {
        const auto& R = fs.ring;
        auto sec = load_section(s, fr, fs);
        auto samples = base_samples<S>(fs);
        Report rep = section_checks(s, sec, samples);
        std::vector<typename S::Element> hs;
        for (const auto& [g, x] : frame_entries(fr)) hs.push_back(x);
        rep.merge(bianchi_check(s, sec, hs));
        json curv = json::array();
        bool flat = true;
        for (std::size_t i = 0; i < sec.dim(); ++i)
            for (std::size_t k = i + 1; k < sec.dim(); ++k) {
                auto F = atiyah_curvature(s, fr, sec, i, k, samples);
                json vals = json::object();
                for (const auto& [g, v] : F) {
                    vals[fs.group.name(g)] = codec::element_to(R, v);
                    flat = flat && R.is_zero(v);
                }
                curv.push_back({{"pair", {sec.names[i], sec.names[k]}}, {"values", vals}});
            }
        rep.add("flat", flat);
        auto j = report_json("atiyah", rep);
        j["curvature"] = curv;
        return j;
    });
}

json cmd_lecomte() {
    return with_context([]<class S>(const S& s, const FrameSystem<S>& fr, const FactorSystem<typename S::Base>& fs) {
        auto sec = load_section(s, fr, fs);
        auto samples = base_samples<S>(fs);
        const std::size_t d = sec.dim();
        std::vector<std::vector<Scalar>> F(d, std::vector<Scalar>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = i + 1; k < d; ++k) {
                F[i][k] = gauge_scalar(s, fr, atiyah_curvature(s, fr, sec, i, k, samples));
                F[k][i] = -F[i][k];
            }
        auto v = lecomte_class_p1(sec.c, F);
        Report rep = section_checks(s, sec, samples);
        rep.add("class_zero", v.splits);
        auto j = report_json("lecomte", rep);
        auto scalars = [](const std::vector<Scalar>& xs) {
            json out = json::array();
            for (const auto& x : xs) out.push_back(codec::scalar_to(x));
            return out;
        };
        json fj = json::array();
        for (const auto& row : F) fj.push_back(scalars(row));
        j["F"] = fj;
        if (v.splits)
            j["xi"] = scalars(v.xi);
        else
            j["witness"] = scalars(v.witness);
        return j;
    });
}

json cmd_l12() {
    LpaRing L(Graph::l12());
    auto A = codec::mat_from(L, load(opt.a_matrix));
    if (A.rows != 2 || A.cols != 2) throw InputError("DimensionMismatch", "A must be 2x2");
    Report rep = alpha1_commute_check(L, A, opt.level);
    rep.add("diag_scalar_form", is_diag_scalar_form(L, A) == rep.ok());
    auto d = delta_a_build(L, A);
    rep.merge(derivation_checks(L, d, l0_spanning(L, 1)));
    json j;
    if (!opt.b_matrix.empty()) {
        auto B = codec::mat_from(L, load(opt.b_matrix));
        // with B the commutation verdict is reported as data; the bracket identity sets the exit code
        auto C = bracket_gr(L, A, B, opt.level);
        j = report_json("l12", bracket_gr_check(L, A, B, opt.level));
        j["bracket"] = codec::mat_to(L, C);
        j["alpha1_commutes"] = rep.ok();
    } else {
        j = report_json("l12", rep);
    }
    j["diag_scalar_form"] = is_diag_scalar_form(L, A);
    return j;
}

int emit(const json& j) {
    std::cout << j.dump(2) << '\n';
    return j.value("ok", false) ? 0 : 1;
}

json error_json(const std::string& command, const char* kind, const Error& e) {
    return {{"command", command}, {"ok", false}, {"error", {{"kind", kind}, {"tag", e.tag()}, {"message", e.what()}}}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strongly graded rings: frames, factor systems, lifts and curvature"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--window", opt.window, "integer window bound |g| <= N");
    app.add_option("--field", opt.field, "scalar field")->check(CLI::IsMember({"q", "qi"}));
    app.add_option("--session", opt.session, "session manifest");
    app.add_flag("--json", opt.json_mode, "JSON output (the only mode)");

    auto with_ring = [](CLI::App* c) {
        c->add_option("--frames", opt.frames, "LPA frame system");
        c->add_option("--graph", opt.graph, "graph; frames are built over the window");
        c->add_option("--frame-kind", opt.frame_kind)->check(CLI::IsMember({"edge-power", "parseval"}));
        c->add_option("--fs", opt.fs, "factor system");
    };
    auto with_lift = [&](CLI::App* c) {
        with_ring(c);
        c->add_option("--derivation", opt.derivation)->required();
        c->add_option("--eta", opt.eta, "\"zero\", \"induced\" or an eta family file");
    };

    std::map<std::string, std::function<json()>> run;
    auto add = [&](const std::string& name, const std::string& help, std::function<json()> f) {
        run[name] = std::move(f);
        return app.add_subcommand(name, help);
    };

    auto* c = add("frames", "build a frame system for a graph", cmd_frames);
    c->add_option("--graph", opt.graph)->required();
    c->add_option("--frame-kind", opt.frame_kind)->check(CLI::IsMember({"edge-power", "parseval"}));
    c->add_option("--out", opt.out);

    c = add("extract", "factor system from frames", cmd_extract);
    with_ring(c);
    c->add_option("--out", opt.out);

    c = add("verify-fs", "check the factor system axioms", cmd_verify_fs);
    c->add_option("--fs", opt.fs)->required();

    c = add("reconstruct", "graded ring from a factor system", cmd_reconstruct);
    c->add_option("--fs", opt.fs)->required();
    c->add_option("--out", opt.out);

    c = add("conjugacy", "verify or apply a conjugacy witness", cmd_conjugacy);
    c->add_option("--fs", opt.fs)->required();
    c->add_option("--fs-b", opt.fs_b);
    c->add_option("--witness", opt.witness)->required();
    c->add_option("--out", opt.out);

    c = add("lift-check", "lifting conditions for (delta, eta)", cmd_lift_check);
    with_lift(c);

    c = add("lift-build", "build the graded lift", cmd_lift_build);
    with_lift(c);
    c->add_option("--out", opt.out);

    c = add("z-lift", "Z-graded lift from the degree-one generator", cmd_z_lift);
    with_ring(c);
    c->add_option("--derivation", opt.derivation)->required();
    c->add_option("--eta1", opt.eta1, "\"zero\" or a matrix file");
    c->add_option("--out", opt.out);

    c = add("defect", "defect 2-cochain of (delta, eta)", cmd_defect);
    with_lift(c);

    c = add("cohomology-solve", "solve the defect and shift eta", cmd_cohomology_solve);
    with_lift(c);
    c->add_option("--center", opt.center, "elements spanning the window for the center");
    c->add_option("--out", opt.out);

    c = add("gauge", "gauge derivation of a crossed homomorphism", cmd_gauge);
    with_ring(c);
    c->add_option("--crossed-hom", opt.crossed_hom)->required();

    c = add("atiyah", "curvature of a section", cmd_atiyah);
    with_ring(c);
    c->add_option("--section", opt.section)->required();

    c = add("lecomte", "Lecomte class at p = 1", cmd_lecomte);
    with_ring(c);
    c->add_option("--section", opt.section)->required();

    c = add("l12", "delta_A bench on L(1,2)", cmd_l12);
    c->add_option("--A", opt.a_matrix)->required();
    c->add_option("--B", opt.b_matrix);
    c->add_option("--level", opt.level)->check(CLI::PositiveNumber);

    std::string command = "usage";
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        InputError err("UsageError", e.what());
        emit(error_json(command, "input", err));
        return 2;
    }
    for (auto* sub : app.get_subcommands()) command = sub->get_name();

    try {
        session.load(opt.session);
        if (!opt.window) opt.window = session.window();
        if (opt.field.empty()) opt.field = session.field().empty() ? "qi" : session.field();
        if (opt.field != "q" && opt.field != "qi") throw InputError("BadField", opt.field);
        codec::set_field(opt.field == "q" ? codec::Field::Rational : codec::Field::Gaussian);
        return emit(run.at(command)());
    } catch (const InputError& e) {
        emit(error_json(command, "input", e));
        return 2;
    } catch (const OutOfWindow& e) {
        emit(error_json(command, "input", e));
        return 2;
    } catch (const MathError& e) {
        emit(error_json(command, "math", e));
        return 1;
    } catch (const std::bad_variant_access&) {
        emit(error_json(command, "input", InputError("BadRing", "--frames needs an LPA ring")));
        return 2;
    } catch (const codec::json::exception& e) {
        emit(error_json(command, "input", InputError("BadJson", e.what())));
        return 2;
    }
}
