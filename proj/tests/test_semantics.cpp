#include <doctest.h>

#include "copa/errors.hpp"
#include "copa/generate.hpp"
#include "copa/reo.hpp"
#include "copa/semantics.hpp"

using namespace copa;

TEST_CASE("a single primitive's semantics is the primitive, states tupled") {
    Connector c;
    c.nodes = {"A", "B"};
    c.primitives["s"] = make_primitive(PrimitiveKind::Sync, {"A", "B"});
    SemanticsResult sem = sem_connector(c, false);
    CHECK(sem.automaton.states == std::set<StateId>{"(q0)"});
    CHECK(sem.automaton.ports == c.nodes);
    CHECK(sem.automaton.has_transition("(q0)", {"A", "B"}, "(q0)"));
    CHECK(sem.automaton.has_transition("(q0)", {}, "(q0)"));
    CHECK(sem.automaton.transitions.size() == 2);
    CHECK(sem.primitiveOrder == std::vector<std::string>{"s"});
    CHECK(sem.stateComponents.at("(q0)") == std::vector<StateId>{"q0"});
}

TEST_CASE("the empty connector maps to the final automaton's shape") {
    Connector empty;
    SemanticsResult sem = sem_connector(empty, false);
    CHECK(sem.automaton.states == std::set<StateId>{"()"});
    CHECK(sem.automaton.ports.empty());
    REQUIRE(sem.automaton.transitions.size() == 1);
    CHECK(sem.automaton.transitions.begin()->label.empty());
}

TEST_CASE("the ring's semantics collapses to the three-state protocol") {
    ExampleSet ex = build_examples();
    SemanticsResult unpruned = sem_connector(ex.ring, false);
    CHECK(unpruned.automaton.states.size() == 8);  // 2*2*2*1*1 tuples
    SemanticsResult pruned = sem_connector(ex.ring, true);
    CHECK(pruned.automaton.states.size() == 3);
    CHECK(check_isomorphic(pruned.automaton, ex.ringBehaviorFull));
    CHECK(pruned.automaton.initial == tuple_state({"q0", "q0", "q0", "q0", "q0"}));
}

TEST_CASE("the size guard fires before tuple allocation") {
    Connector big;
    for (int i = 0; i < 4; ++i) {
        std::string a = "N" + std::to_string(2 * i);
        std::string b = "N" + std::to_string(2 * i + 1);
        big.nodes.insert(a);
        big.nodes.insert(b);
        big.primitives["f" + std::to_string(i)] =
            make_primitive(PrimitiveKind::EmptyFIFO, {a, b});
    }
    CHECK(sem_connector(big, false, 16).automaton.states.size() == 16);
    try {
        sem_connector(big, false, 15);
        FAIL("expected SizeGuard");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SizeGuard);
    }
}

TEST_CASE("semantics of morphisms is contravariant and functorial") {
    Rng rng(23);
    for (int i = 0; i < 10; ++i) {
        Connector c0 = random_connector(rng);
        ConnectorMorphism f = random_extension(rng, c0, "f");
        ConnectorMorphism g = random_extension(rng, f.target, "g");

        PortAutMorphism semF = sem_morphism(f);
        PortAutMorphism semG = sem_morphism(g);
        CHECK(is_valid_morphism(semF));
        CHECK(is_valid_morphism(semG));
        CHECK(semF.source == sem_connector(f.target, false).automaton);
        CHECK(semF.target == sem_connector(f.source, false).automaton);

        CHECK(sem_morphism(identity_connector_morphism(c0)) ==
              identity_morphism(sem_connector(c0, false).automaton));
        CHECK(sem_morphism(compose_connector_morphisms(f, g)) ==
              compose_morphisms(semG, semF));
    }
}

TEST_CASE("the pinned span satisfies the composition law") {
    ExampleSet ex = build_examples();
    CompositionalityReport rep = check_compositionality(ex.insertSpan);
    CHECK(rep.pass);
    CHECK(rep.detail.empty());
    CHECK(is_valid_morphism(rep.isoLhsToRhs));
    CHECK(is_valid_morphism(rep.isoRhsToLhs));
    CHECK(compose_morphisms(rep.isoLhsToRhs, rep.isoRhsToLhs) ==
          identity_morphism(rep.lhs));
    CHECK(check_isomorphic(reachable(rep.rhs), ex.ringBehaviorFull));
}

TEST_CASE("a corrupted span is rejected rather than silently compared") {
    ExampleSet ex = build_examples();
    ConnectorSpan broken = ex.insertSpan;
    broken.right.nodeMap["A"] = "nope";  // image outside the host's nodes
    CHECK_THROWS_AS(check_compositionality(broken), Error);

    ConnectorSpan skewed = ex.insertSpan;
    skewed.left.source.nodes.insert("Z");  // the legs no longer share a source
    CHECK_THROWS_AS(check_compositionality(skewed), Error);
}
