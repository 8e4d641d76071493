#include "copa/json_io.hpp"

#include "copa/errors.hpp"
#include "copa/reo.hpp"

namespace copa {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::set<std::string> string_set(const Json& j, const char* key) {
    const Json& arr = field(j, key);
    if (!arr.is_array()) bad(std::string("field '") + key + "' must be an array");
    std::set<std::string> out;
    for (const Json& v : arr) {
        if (!v.is_string()) bad(std::string("field '") + key + "' must hold strings");
        out.insert(v.get<std::string>());
    }
    return out;
}

std::map<std::string, std::string> string_map(const Json& j, const char* key) {
    const Json& obj = field(j, key);
    if (!obj.is_object()) bad(std::string("field '") + key + "' must be an object");
    std::map<std::string, std::string> out;
    for (const auto& [k, v] : obj.items()) {
        if (!v.is_string()) bad(std::string("field '") + key + "' must map to strings");
        out[k] = v.get<std::string>();
    }
    return out;
}

Json map_to_json(const std::map<std::string, std::string>& m) {
    Json j = Json::object();
    for (const auto& [k, v] : m) j[k] = v;
    return j;
}

void check_valid(const std::vector<std::string>& report, const std::string& what) {
    if (!report.empty())
        throw Error(ErrorKind::Validation, what + ": " + report.front());
}

}  // namespace

Json automaton_to_json(const PortAutomaton& a) {
    Json j = Json::object();
    j["states"] = a.states;
    j["ports"] = a.ports;
    j["initial"] = a.initial;
    Json trans = Json::array();
    for (const Transition& t : a.transitions) {
        Json e = Json::object();
        e["from"] = t.from;
        e["label"] = t.label;
        e["to"] = t.to;
        trans.push_back(std::move(e));
    }
    j["transitions"] = std::move(trans);
    return j;
}

PortAutomaton automaton_from_json(const Json& j) {
    PortAutomaton a;
    a.states = string_set(j, "states");
    a.ports = string_set(j, "ports");
    const Json& init = field(j, "initial");
    if (!init.is_string()) bad("field 'initial' must be a string");
    a.initial = init.get<std::string>();
    const Json& trans = field(j, "transitions");
    if (!trans.is_array()) bad("field 'transitions' must be an array");
    for (const Json& e : trans) {
        Transition t;
        t.from = field(e, "from").get<std::string>();
        t.to = field(e, "to").get<std::string>();
        for (const Json& p : field(e, "label")) t.label.insert(p.get<std::string>());
        a.transitions.insert(std::move(t));
    }
    check_valid(validate_automaton(a), "invalid automaton");
    return a;
}

Json connector_to_json(const Connector& c) {
    Json j = Json::object();
    j["nodes"] = c.nodes;
    Json prims = Json::object();
    for (const auto& [id, aut] : c.primitives) prims[id] = automaton_to_json(aut);
    j["primitives"] = std::move(prims);
    return j;
}

Connector connector_from_json(const Json& j) {
    Connector c;
    c.nodes = string_set(j, "nodes");
    const Json& prims = field(j, "primitives");
    if (!prims.is_object()) bad("field 'primitives' must be an object");
    for (const auto& [id, v] : prims.items()) {
        if (v.is_object() && v.contains("kind")) {
            std::vector<PortName> ports;
            for (const Json& p : field(v, "ports")) ports.push_back(p.get<std::string>());
            c.primitives[id] =
                make_primitive(primitive_kind_from_string(field(v, "kind").get<std::string>()),
                               ports);
        } else {
            c.primitives[id] = automaton_from_json(v);
        }
    }
    check_valid(validate_connector(c), "invalid connector");
    return c;
}

Json morphism_to_json(const PortAutMorphism& f) {
    Json j = Json::object();
    j["source"] = automaton_to_json(f.source);
    j["target"] = automaton_to_json(f.target);
    j["stateMap"] = map_to_json(f.stateMap);
    j["portMap"] = map_to_json(f.portMap);
    return j;
}

PortAutMorphism morphism_from_json(const Json& j) {
    PortAutMorphism f;
    f.source = automaton_from_json(field(j, "source"));
    f.target = automaton_from_json(field(j, "target"));
    f.stateMap = string_map(j, "stateMap");
    f.portMap = string_map(j, "portMap");
    check_valid(validate_morphism(f), "invalid morphism");
    return f;
}

Json connector_morphism_to_json(const ConnectorMorphism& f) {
    Json j = Json::object();
    j["source"] = connector_to_json(f.source);
    j["target"] = connector_to_json(f.target);
    j["primMap"] = map_to_json(f.primMap);
    j["nodeMap"] = map_to_json(f.nodeMap);
    Json wits = Json::object();
    for (const auto& [id, w] : f.witnesses) {
        Json e = Json::object();
        e["stateMap"] = map_to_json(w.stateMap);
        e["portMap"] = map_to_json(w.portMap);
        wits[id] = std::move(e);
    }
    j["witnesses"] = std::move(wits);
    return j;
}

ConnectorMorphism connector_morphism_from_json(const Json& j) {
    ConnectorMorphism f;
    f.source = connector_from_json(field(j, "source"));
    f.target = connector_from_json(field(j, "target"));
    f.primMap = string_map(j, "primMap");
    f.nodeMap = string_map(j, "nodeMap");
    const Json& wits = field(j, "witnesses");
    if (!wits.is_object()) bad("field 'witnesses' must be an object");
    for (const auto& [id, w] : wits.items()) {
        if (!f.source.primitives.count(id) || !f.primMap.count(id))
            bad("witness for unknown primitive '" + id + "'");
        PortAutMorphism m;
        m.source = f.target.primitives.at(f.primMap.at(id));
        m.target = f.source.primitives.at(id);
        m.stateMap = string_map(w, "stateMap");
        m.portMap = string_map(w, "portMap");
        f.witnesses[id] = std::move(m);
    }
    check_valid(validate_connector_morphism(f), "invalid connector morphism");
    return f;
}

Json net_to_json(const PetriNet& n) {
    Json j = Json::object();
    j["transitions"] = n.transitions;
    Json places = Json::object();
    for (const auto& [id, p] : n.places) {
        Json e = Json::object();
        Json in = Json::object(), out = Json::object();
        for (const auto& [t, w] : p.in) in[t] = w;
        for (const auto& [t, w] : p.out) out[t] = w;
        e["in"] = std::move(in);
        e["out"] = std::move(out);
        e["tokens"] = p.tokens;
        e["cap"] = p.capacity;
        places[id] = std::move(e);
    }
    j["places"] = std::move(places);
    return j;
}

PetriNet net_from_json(const Json& j) {
    PetriNet n;
    n.transitions = string_set(j, "transitions");
    const Json& places = field(j, "places");
    if (!places.is_object()) bad("field 'places' must be an object");
    for (const auto& [id, e] : places.items()) {
        Place p;
        for (const auto& [t, w] : field(e, "in").items()) p.in[t] = w.get<unsigned>();
        for (const auto& [t, w] : field(e, "out").items()) p.out[t] = w.get<unsigned>();
        p.tokens = field(e, "tokens").get<unsigned>();
        p.capacity = field(e, "cap").get<unsigned>();
        n.places[id] = std::move(p);
    }
    check_valid(validate_net(n), "invalid net");
    return n;
}

Json transfer_report_to_json(const TransferReport& r) {
    Json j = Json::object();
    j["verdict"] = to_string(r.verdict);
    j["newConnector"] = connector_to_json(r.newConnector);
    Json pre = Json::array();
    for (const Preimage& p : r.preimages) {
        Json e = Json::object();
        e["state"] = p.state;
        e["reachable"] = p.reachable;
        pre.push_back(std::move(e));
    }
    j["preimages"] = std::move(pre);
    j["stateMap"] = map_to_json(r.semMorphism.stateMap);
    return j;
}

Json compositionality_report_to_json(const CompositionalityReport& r) {
    Json j = Json::object();
    j["pass"] = r.pass;
    j["detail"] = r.detail;
    j["lhs"] = automaton_to_json(r.lhs);
    j["rhs"] = automaton_to_json(r.rhs);
    if (r.pass) j["iso"] = map_to_json(r.isoRhsToLhs.stateMap);
    return j;
}

}  // namespace copa
