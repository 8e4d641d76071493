#include <doctest.h>

#include "copa/dot.hpp"
#include "copa/errors.hpp"
#include "copa/json_io.hpp"
#include "copa/reo.hpp"
#include "copa/text_format.hpp"

using namespace copa;

TEST_CASE("json round-trips every object kind byte-identically") {
    ExampleSet ex = build_examples();

    Json j = automaton_to_json(ex.ringBehaviorFull);
    CHECK(automaton_from_json(j) == ex.ringBehaviorFull);
    CHECK(automaton_to_json(automaton_from_json(j)).dump() == j.dump());

    j = connector_to_json(ex.ring);
    CHECK(connector_from_json(j) == ex.ring);

    j = morphism_to_json(ex.sampleSimulation);
    CHECK(morphism_from_json(j) == ex.sampleSimulation);

    j = connector_morphism_to_json(ex.insertSpan.right);
    CHECK(connector_morphism_from_json(j) == ex.insertSpan.right);

    j = net_to_json(example_net());
    CHECK(net_from_json(j) == example_net());
}

TEST_CASE("json constructor shorthand expands to the primitive automaton") {
    Json j = {{"nodes", {"A", "B"}},
              {"primitives", {{"f", {{"kind", "EmptyFIFO"}, {"ports", {"A", "B"}}}}}}};
    Connector c = connector_from_json(j);
    CHECK(c.primitives.at("f") == make_primitive(PrimitiveKind::EmptyFIFO, {"A", "B"}));
}

TEST_CASE("json deserializers distinguish parse and validation failures") {
    try {
        automaton_from_json(Json::parse(R"({"states": ["q0"]})"));
        FAIL("expected Parse");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
    }
    try {
        automaton_from_json(Json::parse(
            R"({"states": ["q0"], "ports": [], "initial": "zz", "transitions": []})"));
        FAIL("expected Validation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Validation);
    }
}

TEST_CASE("the text format parses what it prints") {
    Workspace ws = builtin_workspace();
    std::string text = serialize_automaton("ring_behavior", ws.automata.at("ring_behavior")) +
                       serialize_connector("ring", ws.connectors.at("ring"), ws) +
                       serialize_morphism("sample_sim", ws.morphisms.at("sample_sim"),
                                          "sample_sim_source", "sample_sim_target") +
                       serialize_net("ring_net", ws.nets.at("ring_net"));
    // Morphism blocks reference named endpoints, so print those first.
    std::string endpoints =
        serialize_automaton("sample_sim_source", ws.morphisms.at("sample_sim").source) +
        serialize_automaton("sample_sim_target", ws.morphisms.at("sample_sim").target);

    Workspace back;
    parse_text(endpoints + text, back);
    CHECK(back.automata.at("ring_behavior") == ws.automata.at("ring_behavior"));
    CHECK(back.connectors.at("ring") == ws.connectors.at("ring"));
    CHECK(back.morphisms.at("sample_sim") == ws.morphisms.at("sample_sim"));
    CHECK(back.nets.at("ring_net") == ws.nets.at("ring_net"));
}

TEST_CASE("connector morphisms round-trip with explicit witnesses") {
    Workspace ws = builtin_workspace();
    std::string text =
        serialize_connector("iface", ws.connectors.at("iface"), ws) +
        serialize_connector("host", ws.connectors.at("host"), ws) +
        serialize_connector_morphism("insert_match", ws.connectorMorphisms.at("insert_match"),
                                     "iface", "host");
    Workspace back;
    parse_text(text, back);
    CHECK(back.connectorMorphisms.at("insert_match") == ws.connectorMorphisms.at("insert_match"));
}

TEST_CASE("parse errors carry line and column") {
    Workspace ws;
    try {
        parse_text("automaton a {\n  states q0;\n  initial ;\n}\n", ws);
        FAIL("expected Parse");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
        CHECK(std::string(e.what()).find("3:") != std::string::npos);
    }
}

TEST_CASE("the builtin workspace is complete and valid") {
    Workspace ws = builtin_workspace();
    for (const char* name : {"ring_behavior", "ring_behavior_full", "tri_loop", "ab_loop",
                             "phase", "seq_left", "seq_right"})
        CHECK(ws.automata.count(name));
    for (const char* name : {"ring", "iface", "patch", "host"}) CHECK(ws.connectors.count(name));
    for (const char* name : {"sample_sim", "seq_left_to_phase", "seq_right_to_phase"})
        CHECK(ws.morphisms.count(name));
    for (const char* name : {"insert_rule", "insert_match"})
        CHECK(ws.connectorMorphisms.count(name));
    CHECK(ws.nets.count("ring_net"));

    ExampleSet ex = build_examples();
    CHECK(ws.connectors.at("ring") == ex.ring);
    CHECK(ws.morphisms.at("sample_sim") == ex.sampleSimulation);
    CHECK(ws.connectorMorphisms.at("insert_rule") == ex.insertSpan.left);
    CHECK(ws.nets.at("ring_net") == example_net());
}

TEST_CASE("dot output names the graph and renders tau distinctly") {
    ExampleSet ex = build_examples();
    std::string d = automaton_to_dot("ring_behavior", ex.ringBehavior);
    CHECK(d.find("digraph") != std::string::npos);
    CHECK(d.find("ring_behavior") != std::string::npos);
    CHECK(d.find("{A}") != std::string::npos);
    CHECK(automaton_to_dot("x", final_automaton()).find("∅") != std::string::npos);

    std::string full = connector_to_dot("ring", ex.ring, false);
    std::string hidden = connector_to_dot("ring", ex.ring, true);
    CHECK(full.find("_h1") != std::string::npos);
    CHECK(hidden.find("_h1") == std::string::npos);
    CHECK(hidden.find("merger") != std::string::npos);
}

TEST_CASE("serialization is deterministic") {
    ExampleSet ex = build_examples();
    Workspace ws = builtin_workspace();
    CHECK(serialize_connector("ring", ex.ring, ws) == serialize_connector("ring", ex.ring, ws));
    CHECK(connector_to_json(ex.ring).dump(2) == connector_to_json(ex.ring).dump(2));
}
