#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "sepgraph/asdim.hpp"
#include "sepgraph/cuts.hpp"
#include "sepgraph/families.hpp"
#include "sepgraph/graph.hpp"
#include "sepgraph/profile.hpp"

// JSON views of every result type. nlohmann::json keeps keys sorted, so a
// fixed result serializes to identical bytes run after run.
namespace sepgraph {

using json = nlohmann::json;

inline json json_of(const Rational& r) { return r.str(); }

inline json json_of(const CheegerResult& r) {
    return json{{"value", r.value.str()}, {"witness", r.witness}, {"method", r.method}};
}

inline json json_of(const CutResult& r) {
    return json{{"value", r.value},
                {"witness", r.witness},
                {"largest_component_size", r.largest_component_size},
                {"method", r.method}};
}

inline json json_of(const CutBoundsResult& r) {
    return json{{"lower", r.lower},           {"lower_method", r.lower_method},
                {"upper", r.upper},           {"upper_witness", r.upper_witness},
                {"upper_exact", r.upper_exact}, {"upper_method", r.upper_method}};
}

inline json json_of(const SubgraphRef& ref) {
    return json{{"size", ref.size()}, {"vertices", ref.vertices}};
}

inline json json_of(const EfficientCutSequence& s) {
    json steps = json::array();
    for (const auto& st : s.steps)
        steps.push_back(json{{"removed", st.removed},
                             {"successor", json_of(st.successor)},
                             {"size_drop", st.size_drop}});
    return json{{"origin", json_of(s.origin)},
                {"efficiency_k", s.efficiency_k.str()},
                {"c_gamma", s.c_gamma.str()},
                {"origin_cut", s.origin_cut},
                {"steps", steps},
                {"terminal", json_of(s.terminal)}};
}

inline json json_of(const ExpanderCertificate& c) {
    return json{{"subgraph", json_of(c.subgraph)},
                {"epsilon", c.epsilon.str()},
                {"max_degree", c.max_degree},
                {"method", c.method}};
}

inline json json_of(const SeparationProfile& p) {
    json points = json::array();
    for (const auto& [n, pt] : p.points)
        points.push_back(json{{"n", n},
                              {"value", pt.value},
                              {"kind", pt.kind},
                              {"witness", pt.witness},
                              {"witness_size", pt.witness.size()}});
    return json{{"source", p.source}, {"seed", p.seed}, {"points", points}};
}

inline json json_of(const ProfilePoint& pt) {
    return json{{"value", pt.value}, {"kind", pt.kind}, {"witness_size", pt.witness.size()}};
}

inline json json_of(const ProfileComparison& c) {
    json ev = json::array();
    for (const auto& e : c.evidence)
        ev.push_back(json{{"n", e.n},
                          {"f_value", e.f_value},
                          {"g_value", e.g_value},
                          {"required_c", e.required_c}});
    json out{{"relation", c.relation}, {"evidence", ev}};
    if (c.constant)
        out["constant"] = *c.constant;
    else
        out["constant"] = nullptr;
    return out;
}

inline json json_of(const RegularMapCertificate& c) {
    return json{{"lipschitz", c.lipschitz}, {"multiplicity", c.multiplicity}, {"valid", c.valid}};
}

inline json json_of(const IndexSet& s) {
    return json{{"bits", s.bits}, {"depth", s.depth}, {"elements", s.elements}};
}

inline json json_of(const ComponentRecord& r) {
    json g;
    if (r.girth_value)
        g = *r.girth_value;
    else
        g = nullptr;
    return json{{"label", r.label},
                {"size", r.size},
                {"girth", g},
                {"epsilon", r.epsilon.str()},
                {"epsilon_method", r.epsilon_method},
                {"degree", r.degree}};
}

inline json json_of(const GraphFamily& f) {
    json members = json::array();
    for (const auto& rec : f.members) members.push_back(json_of(rec));
    return json{{"base", "cages"}, {"positions", f.positions}, {"members", members}};
}

inline json json_of(const SparsifiedSequence& s) {
    json kept = json::array();
    for (const auto& rec : s.kept) kept.push_back(json_of(rec));
    json ratios = json::array();
    for (const auto& r : s.size_ratios) ratios.push_back(r.str());
    return json{{"kept", kept}, {"size_ratios", ratios}};
}

inline json json_of(const DistinguishReport& r) {
    return json{{"c", r.c},
                {"scale", r.scale},
                {"lower_at_c", r.lower_at_c},
                {"upper_at_c", r.upper_at_c},
                {"epsilon_used", r.epsilon_used.str()},
                {"epsilon_method", r.epsilon_method},
                {"verdict", r.verdict}};
}

inline json json_of(const AsdimCutIteration& it) {
    return json{{"chosen_class", it.chosen_class},
                {"u", it.u},
                {"l", it.l},
                {"shell", it.shell},
                {"shell_size", it.shell.size()},
                {"working_before", it.working_before},
                {"working_after", it.working_after}};
}

inline json json_of(const AsdimCutTrace& t) {
    json its = json::array();
    for (const auto& it : t.iterations) its.push_back(json_of(it));
    return json{{"iterations", its},
                {"iteration_count", t.iterations.size()},
                {"total_cut", t.total_cut},
                {"total_cut_size", t.total_cut.size()},
                {"k_of_m", t.k_of_m}};
}

inline json json_of(const AsdimSepBound& b) {
    return json{{"value", b.value}, {"k_of_m", b.k_of_m}, {"scale_limit", b.scale_limit}};
}

}  // namespace sepgraph
