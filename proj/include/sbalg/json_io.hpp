#pragma once

#include <string>

#include <json.hpp>

#include "ar_quiver.hpp"
#include "classify.hpp"
#include "constructions.hpp"
#include "representation.hpp"

namespace sbalg {

using json = nlohmann::ordered_json;

inline json to_json(const MonomialAlgebra& alg) {
    const auto& q = alg.quiver();
    json j;
    j["name"] = alg.name();
    j["vertices"] = q.vertices();
    json arrows = json::array();
    for (const auto& a : q.arrows())
        arrows.push_back({{"name", a.name}, {"src", q.vertex_name(a.src)}, {"tgt", q.vertex_name(a.tgt)}});
    j["arrows"] = arrows;
    json rels = json::array();
    for (const auto& r : alg.relations()) {
        json p = json::array();
        for (int a : r) p.push_back(q.arrow(a).name);
        rels.push_back(p);
    }
    j["relations"] = rels;
    return j;
}

inline std::string word_literal(const Quiver& q, const Word& w) {
    return w.empty() ? "@" + q.vertex_name(w.base) : format_word(q, w);
}

template <class F>
json to_json(const Quiver& q, const Representation<F>& M) {
    json dims = json::object(), mats = json::object();
    for (int v = 0; v < q.num_vertices(); ++v) dims[q.vertex_name(v)] = M.dims[v];
    for (int a = 0; a < q.num_arrows(); ++a) {
        json m = json::array();
        const auto& A = M.mats[a];
        for (std::size_t i = 0; i < A.rows(); ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < A.cols(); ++k) row.push_back(A(i, k).str());
            m.push_back(row);
        }
        mats[q.arrow(a).name] = m;
    }
    return {{"dims", dims}, {"mats", mats}};
}

inline json to_json(const Classification& c) {
    const auto& q = c.resolved.quiver();
    json j;
    j["tag"] = tag_name(c.tag);
    if (!c.reason.empty()) j["reason"] = c.reason;
    if (c.band) j["band"] = format_word(q, *c.band);
    if (c.eps) j["eps"] = c.eps->str();
    if (c.barbell) j["barbell"] = {(*c.barbell)[0].str(), (*c.barbell)[1].str(), (*c.barbell)[2].str()};
    if (c.wind_wheel_word) j["wind_wheel_word"] = *c.wind_wheel_word;
    j["resolved"] = to_json(c.resolved);
    return j;
}

inline json to_json(const WindWheelData& d) {
    const auto& q = d.algebra.quiver();
    json j;
    j["word"] = format_word(q, d.word);
    j["t"] = d.t;
    json factors = json::array();
    for (const auto& [u, v] : d.factors) factors.push_back({{"u", format_word(q, u)}, {"v", format_word(q, v)}});
    j["factors"] = factors;
    j["sigma"] = d.sigma.str();
    json bars = json::array();
    for (const auto& b : d.bars) bars.push_back(format_word(q, b));
    j["bars"] = bars;
    j["lambda"] = d.lambda.str();
    j["rho"] = d.rho.str();
    j["pi"] = d.pi.str();
    j["ramification"] = ramification_sequence(d).str();
    json zs = json::array();
    for (const auto& z : z_words(d))
        zs.push_back({{"left_period", format_word(q, z.left_period)},
                      {"middle", format_word(q, z.middle)},
                      {"right_period", format_word(q, z.right_period)}});
    j["z_words"] = zs;
    j["euler_characteristic"] = quilt_euler_characteristic(d.t);
    j["algebra"] = to_json(d.algebra);
    return j;
}

inline std::string kind_name(ArrowKind k) { return k == ArrowKind::Mono ? "mono" : "epi"; }

inline std::string sectional_kind_name(SectionalKind k) {
    switch (k) {
    case SectionalKind::MonoRay: return "mono_ray";
    case SectionalKind::EpiCoray: return "epi_coray";
    case SectionalKind::Concatenation: return "concatenation";
    case SectionalKind::Violation: return "violation";
    }
    return "?";
}

inline json to_json(const ARPatch& p) {
    json j;
    j["seed"] = p.seed;
    j["radius"] = p.radius;
    json nodes = json::array();
    for (const auto& [k, _] : p.nodes) nodes.push_back({{"word", k}, {"distance", p.distance.at(k)}});
    j["nodes"] = nodes;
    json arrows = json::array();
    for (const auto& a : p.arrows) arrows.push_back({{"source", a.source}, {"target", a.target}, {"kind", kind_name(a.kind)}});
    j["arrows"] = arrows;
    json tau = json::array();
    for (const auto& [t, x] : p.tau_pairs) tau.push_back({{"tau", t}, {"module", x}});
    j["tau_pairs"] = tau;
    j["markers"] = p.markers;
    return j;
}

inline json to_json(const SectionalReport& r) {
    json paths = json::array();
    for (const auto& sp : r.paths) {
        json kinds = json::array();
        for (auto k : sp.kinds) kinds.push_back(kind_name(k));
        json e = {{"vertices", sp.vertices}, {"kinds", kinds}, {"class", sectional_kind_name(sp.kind)}, {"truncated", sp.truncated}};
        if (!sp.valley.empty()) e["valley"] = sp.valley;
        paths.push_back(e);
    }
    return {{"paths", paths}, {"violations", r.violations.size()}, {"truncated_violations", r.truncated_violations}};
}

} // namespace sbalg
