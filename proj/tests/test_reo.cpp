#include <doctest.h>

#include "copa/errors.hpp"
#include "copa/reo.hpp"

using namespace copa;

TEST_CASE("primitive kinds round-trip through their names") {
    for (auto kind : {PrimitiveKind::Sync, PrimitiveKind::EmptyFIFO, PrimitiveKind::FullFIFO,
                      PrimitiveKind::Router, PrimitiveKind::Merger}) {
        CHECK(is_primitive_kind(to_string(kind)));
        CHECK(primitive_kind_from_string(to_string(kind)) == kind);
    }
    CHECK_FALSE(is_primitive_kind("Fifo"));
    CHECK_THROWS_AS(primitive_kind_from_string("Fifo"), Error);
}

TEST_CASE("arity and duplicate ports are rejected") {
    CHECK_THROWS_AS(make_primitive(PrimitiveKind::Sync, {"A"}), Error);
    CHECK_THROWS_AS(make_primitive(PrimitiveKind::Router, {"A", "B"}), Error);
    CHECK_THROWS_AS(make_primitive(PrimitiveKind::Sync, {"A", "A"}), Error);
    CHECK_THROWS_AS(make_primitive(PrimitiveKind::Merger, {"A", "B", "A"}), Error);
}

TEST_CASE("every primitive state carries a tau loop") {
    for (auto kind : {PrimitiveKind::Sync, PrimitiveKind::EmptyFIFO, PrimitiveKind::FullFIFO}) {
        PortAutomaton a = make_primitive(kind, {"A", "B"});
        CHECK(validate_automaton(a).empty());
        for (const StateId& q : a.states) CHECK(a.has_transition(q, {}, q));
    }
    for (auto kind : {PrimitiveKind::Router, PrimitiveKind::Merger}) {
        PortAutomaton a = make_primitive(kind, {"A", "B", "C"});
        CHECK(validate_automaton(a).empty());
        for (const StateId& q : a.states) CHECK(a.has_transition(q, {}, q));
    }
}

TEST_CASE("dual primitives coincide under port shuffles") {
    CHECK(make_primitive(PrimitiveKind::Sync, {"A", "B"}) ==
          make_primitive(PrimitiveKind::Sync, {"B", "A"}));
    CHECK(make_primitive(PrimitiveKind::FullFIFO, {"B", "A"}) ==
          make_primitive(PrimitiveKind::EmptyFIFO, {"A", "B"}));
    CHECK(make_primitive(PrimitiveKind::Merger, {"B", "C", "A"}) ==
          make_primitive(PrimitiveKind::Router, {"A", "B", "C"}));
    CHECK(make_primitive(PrimitiveKind::EmptyFIFO, {"A", "B"}) !=
          make_primitive(PrimitiveKind::EmptyFIFO, {"B", "A"}));
}

TEST_CASE("the pinned example set is internally consistent") {
    ExampleSet ex = build_examples();
    CHECK(validate_connector(ex.ring).empty());
    CHECK(validate_automaton(ex.ringBehavior).empty());
    CHECK(validate_automaton(ex.ringBehaviorFull).empty());
    CHECK(is_valid_morphism(ex.sampleSimulation));
    CHECK(is_valid_morphism(ex.ringCospan.left));
    CHECK(is_valid_morphism(ex.ringCospan.right));
    CHECK(is_valid_connector_morphism(ex.insertSpan.left));
    CHECK(is_valid_connector_morphism(ex.insertSpan.right));
    // The span's interface is the empty-primitive connector over {A,B}.
    CHECK(ex.insertSpan.left.source.primitives.empty());
    CHECK(ex.insertSpan.left.source.nodes == std::set<PortName>{"A", "B"});
    CHECK(ex.insertSpan.left.source == ex.insertSpan.right.source);
}
