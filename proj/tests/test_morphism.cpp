#include <doctest.h>

#include "copa/errors.hpp"
#include "copa/generate.hpp"
#include "copa/morphism.hpp"
#include "copa/reo.hpp"

using namespace copa;

TEST_CASE("the sample simulation validates and needs the target tau loop") {
    PortAutMorphism f = build_examples().sampleSimulation;
    CHECK(is_valid_morphism(f));

    PortAutMorphism broken = f;
    broken.target.transitions.erase(Transition{"p0", {}, "p0"});
    auto report = validate_morphism(broken);
    REQUIRE_FALSE(report.empty());
    CHECK(report.front().find("q2") != std::string::npos);
}

TEST_CASE("identity and composition behave categorically") {
    Rng rng(7);
    PortAutomaton a0 = random_automaton(rng);
    PortAutMorphism f = random_morphism_into(rng, a0, "l");
    PortAutMorphism g = random_morphism_into(rng, f.source, "m");
    CHECK(is_valid_morphism(f));
    CHECK(is_valid_morphism(g));

    PortAutMorphism gf = compose_morphisms(g, f);
    CHECK(is_valid_morphism(gf));
    CHECK(compose_morphisms(identity_morphism(g.source), g) == g);
    CHECK(compose_morphisms(g, identity_morphism(g.target)) == g);

    CHECK_THROWS_AS(compose_morphisms(f, g), Error);  // shapes do not line up
}

TEST_CASE("the terminal morphism is the only morphism into the final automaton") {
    PortAutomaton a = make_primitive(PrimitiveKind::EmptyFIFO, {"A", "B"});
    PortAutMorphism t = terminal_morphism(a);
    CHECK(is_valid_morphism(t));
    CHECK(enumerate_morphisms(a, final_automaton()).size() == 1);
}

TEST_CASE("find_simulation agrees with exhaustive enumeration") {
    Rng rng(11);
    for (int i = 0; i < 30; ++i) {
        PortAutomaton a = random_automaton(rng, 2, 2);
        PortAutomaton b = random_automaton(rng, 2, 2);
        auto found = find_simulation(a, b);
        auto all = enumerate_morphisms(a, b);
        CHECK(found.has_value() == !all.empty());
        if (found) {
            CHECK(is_valid_morphism(*found));
            CHECK(*found == all.front());  // deterministic: the least one
        }
    }
}

TEST_CASE("search budget exhaustion is an error, not a negative answer") {
    ExampleSet ex = build_examples();
    CHECK_THROWS_AS(find_simulation(ex.ringBehaviorFull, ex.ringBehaviorFull, 2), Error);
    try {
        find_simulation(ex.ringBehaviorFull, ex.ringBehaviorFull, 2);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Budget);
    }
}

TEST_CASE("isomorphism is found up to port and state renaming") {
    PortAutomaton a = make_primitive(PrimitiveKind::EmptyFIFO, {"A", "B"});
    PortAutomaton b = make_primitive(PrimitiveKind::EmptyFIFO, {"X", "Y"});
    auto iso = check_isomorphic(a, b);
    REQUIRE(iso);
    auto [f, g] = *iso;
    CHECK(is_valid_morphism(f));
    CHECK(is_valid_morphism(g));
    CHECK(compose_morphisms(f, g) == identity_morphism(a));
    CHECK(compose_morphisms(g, f) == identity_morphism(b));

    // Dropping a tau loop changes the transition count: not isomorphic.
    PortAutomaton c = a;
    c.transitions.erase(Transition{"q1", {}, "q1"});
    CHECK_FALSE(check_isomorphic(a, c));

    // FullFIFO(A,B) is EmptyFIFO(B,A): isomorphic to a by swapping ports.
    CHECK(check_isomorphic(a, make_primitive(PrimitiveKind::FullFIFO, {"A", "B"})));
}

TEST_CASE("fixed-port search rejects non-total pinnings") {
    PortAutomaton a = make_primitive(PrimitiveKind::Sync, {"A", "B"});
    CHECK_THROWS_AS(find_simulation_fixed_ports(a, a, {{"A", "A"}}), Error);
    auto f = find_simulation_fixed_ports(a, a, {{"A", "A"}, {"B", "B"}});
    REQUIRE(f);
    CHECK(*f == identity_morphism(a));
}
