#include "copa/reo.hpp"

#include <set>

#include "copa/errors.hpp"

namespace copa {

std::string to_string(PrimitiveKind kind) {
    switch (kind) {
        case PrimitiveKind::Sync: return "Sync";
        case PrimitiveKind::EmptyFIFO: return "EmptyFIFO";
        case PrimitiveKind::FullFIFO: return "FullFIFO";
        case PrimitiveKind::Router: return "Router";
        case PrimitiveKind::Merger: return "Merger";
    }
    return "?";
}

PrimitiveKind primitive_kind_from_string(const std::string& name) {
    if (name == "Sync") return PrimitiveKind::Sync;
    if (name == "EmptyFIFO") return PrimitiveKind::EmptyFIFO;
    if (name == "FullFIFO") return PrimitiveKind::FullFIFO;
    if (name == "Router") return PrimitiveKind::Router;
    if (name == "Merger") return PrimitiveKind::Merger;
    throw Error(ErrorKind::InvalidArgument, "unknown primitive kind '" + name + "'");
}

bool is_primitive_kind(const std::string& name) {
    return name == "Sync" || name == "EmptyFIFO" || name == "FullFIFO" || name == "Router" ||
           name == "Merger";
}

PortAutomaton make_primitive(PrimitiveKind kind, const std::vector<PortName>& ports) {
    std::size_t arity = (kind == PrimitiveKind::Router || kind == PrimitiveKind::Merger) ? 3 : 2;
    if (ports.size() != arity)
        throw Error(ErrorKind::InvalidArgument, to_string(kind) + " takes " +
                                                    std::to_string(arity) + " ports, got " +
                                                    std::to_string(ports.size()));
    if (std::set<PortName>(ports.begin(), ports.end()).size() != ports.size())
        throw Error(ErrorKind::InvalidArgument, to_string(kind) + ": duplicate port names");

    PortAutomaton a;
    a.ports.insert(ports.begin(), ports.end());
    switch (kind) {
        case PrimitiveKind::Sync:
            a.states = {"q0"};
            a.initial = "q0";
            a.transitions = {{"q0", {ports[0], ports[1]}, "q0"}, {"q0", {}, "q0"}};
            break;
        case PrimitiveKind::EmptyFIFO:
            a.states = {"q0", "q1"};
            a.initial = "q0";
            a.transitions = {{"q0", {ports[0]}, "q1"},
                             {"q1", {ports[1]}, "q0"},
                             {"q0", {}, "q0"},
                             {"q1", {}, "q1"}};
            break;
        case PrimitiveKind::FullFIFO:
            a.states = {"q0", "q1"};
            a.initial = "q0";
            a.transitions = {{"q0", {ports[1]}, "q1"},
                             {"q1", {ports[0]}, "q0"},
                             {"q0", {}, "q0"},
                             {"q1", {}, "q1"}};
            break;
        case PrimitiveKind::Router:
            a.states = {"q0"};
            a.initial = "q0";
            a.transitions = {{"q0", {ports[0], ports[1]}, "q0"},
                             {"q0", {ports[0], ports[2]}, "q0"},
                             {"q0", {}, "q0"}};
            break;
        case PrimitiveKind::Merger:
            a.states = {"q0"};
            a.initial = "q0";
            a.transitions = {{"q0", {ports[2], ports[0]}, "q0"},
                             {"q0", {ports[2], ports[1]}, "q0"},
                             {"q0", {}, "q0"}};
            break;
    }
    return a;
}

namespace {

Connector ring_connector() {
    Connector c;
    c.nodes = {"A", "B", "C", "D", "_h1", "_h2"};
    c.primitives["fifo_ab"] = make_primitive(PrimitiveKind::EmptyFIFO, {"A", "B"});
    c.primitives["fifo_cd"] = make_primitive(PrimitiveKind::EmptyFIFO, {"C", "D"});
    c.primitives["full"] = make_primitive(PrimitiveKind::FullFIFO, {"_h1", "_h2"});
    c.primitives["merger"] = make_primitive(PrimitiveKind::Merger, {"B", "D", "_h1"});
    c.primitives["router"] = make_primitive(PrimitiveKind::Router, {"_h2", "A", "C"});
    return c;
}

PortAutomaton ring_behavior() {
    PortAutomaton a;
    a.states = {"s0", "s1", "s2"};
    a.ports = {"A", "B", "C", "D"};
    a.initial = "s0";
    a.transitions = {{"s0", {"A"}, "s1"},
                     {"s1", {"B"}, "s0"},
                     {"s0", {"C"}, "s2"},
                     {"s2", {"D"}, "s0"}};
    return a;
}

PortAutomaton ring_behavior_full() {
    PortAutomaton a;
    a.states = {"s0", "s1", "s2"};
    a.ports = {"A", "B", "C", "D", "_h1", "_h2"};
    a.initial = "s0";
    a.transitions = {{"s0", {"A", "_h2"}, "s1"},
                     {"s1", {"B", "_h1"}, "s0"},
                     {"s0", {"C", "_h2"}, "s2"},
                     {"s2", {"D", "_h1"}, "s0"},
                     {"s0", {}, "s0"},
                     {"s1", {}, "s1"},
                     {"s2", {}, "s2"}};
    return a;
}

PortAutMorphism sample_simulation() {
    PortAutomaton tri;
    tri.states = {"q0", "q1", "q2"};
    tri.ports = {"A", "B", "C"};
    tri.initial = "q0";
    tri.transitions = {{"q0", {"A"}, "q1"}, {"q1", {"B", "C"}, "q2"}, {"q2", {"C"}, "q0"}};

    PortAutomaton duo;
    duo.states = {"p0", "p1"};
    duo.ports = {"A", "B"};
    duo.initial = "p0";
    duo.transitions = {{"p0", {"A"}, "p1"}, {"p1", {"B"}, "p0"}, {"p0", {}, "p0"}};

    PortAutMorphism f{tri, duo, {{"q0", "p0"}, {"q1", "p1"}, {"q2", "p0"}},
                      {{"A", "A"}, {"B", "B"}}};
    return f;
}

Cospan ring_cospan() {
    PortAutomaton phase;
    phase.states = {"i0", "i1"};
    phase.ports = {"A", "B", "C", "D"};
    phase.initial = "i0";
    phase.transitions = {{"i0", {"A"}, "i1"},
                         {"i0", {"C"}, "i1"},
                         {"i1", {"B"}, "i0"},
                         {"i1", {"D"}, "i0"}};

    PortAutomaton left;
    left.states = {"p0", "p1", "p2", "p3"};
    left.ports = {"A", "B", "C", "D"};
    left.initial = "p0";
    left.transitions = {{"p0", {"A"}, "p2"}, {"p2", {"B"}, "p0"}, {"p0", {"C"}, "p1"},
                        {"p1", {"D"}, "p0"}, {"p2", {"D"}, "p3"}, {"p3", {"C"}, "p2"}};

    PortAutomaton right;
    right.states = {"r0", "r1", "r2", "r3"};
    right.ports = {"A", "B", "C", "D"};
    right.initial = "r0";
    right.transitions = {{"r0", {"C"}, "r1"}, {"r1", {"D"}, "r0"}, {"r0", {"A"}, "r2"},
                         {"r2", {"B"}, "r0"}, {"r1", {"B"}, "r3"}, {"r3", {"A"}, "r1"}};

    std::map<PortName, PortName> id4{{"A", "A"}, {"B", "B"}, {"C", "C"}, {"D", "D"}};
    PortAutMorphism fl{left, phase,
                       {{"p0", "i0"}, {"p3", "i0"}, {"p1", "i1"}, {"p2", "i1"}}, id4};
    PortAutMorphism fr{right, phase,
                       {{"r0", "i0"}, {"r3", "i0"}, {"r1", "i1"}, {"r2", "i1"}}, id4};
    return Cospan{fl, fr};
}

ConnectorSpan insert_span() {
    Connector iface;
    iface.nodes = {"A", "B"};

    Connector patch;
    patch.nodes = {"A", "B"};
    patch.primitives["fifo_ab"] = make_primitive(PrimitiveKind::EmptyFIFO, {"A", "B"});

    Connector host = ring_connector();
    host.primitives.erase("fifo_ab");

    ConnectorMorphism rule{iface, patch, {}, {{"A", "A"}, {"B", "B"}}, {}};
    ConnectorMorphism match{iface, host, {}, {{"A", "A"}, {"B", "B"}}, {}};
    return ConnectorSpan{rule, match};
}

}  // namespace

ExampleSet build_examples() {
    ExampleSet ex;
    ex.ring = ring_connector();
    ex.ringBehavior = ring_behavior();
    ex.ringBehaviorFull = ring_behavior_full();
    ex.sampleSimulation = sample_simulation();
    ex.ringCospan = ring_cospan();
    ex.insertSpan = insert_span();
    return ex;
}

}  // namespace copa
