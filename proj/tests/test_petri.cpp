#include <doctest.h>

#include "copa/errors.hpp"
#include "copa/generate.hpp"
#include "copa/petri.hpp"
#include "copa/reo.hpp"
#include "copa/semantics.hpp"

using namespace copa;

TEST_CASE("net validation catches unknown arcs and overfull places") {
    PetriNet net = example_net();
    CHECK(validate_net(net).empty());

    PetriNet bad = net;
    bad.places["c1"].in["ghost"] = 1;
    CHECK_FALSE(validate_net(bad).empty());

    bad = net;
    bad.places["c1"].tokens = 2;  // capacity is 1
    CHECK_FALSE(validate_net(bad).empty());
}

TEST_CASE("the center place encodes with the exact firing table") {
    PetriNet net = example_net();
    PortAutomaton a = encode_place(net, "c1");
    CHECK(a.states == std::set<StateId>{"0", "1"});
    CHECK(a.initial == "1");
    CHECK(a.ports == std::set<PortName>{"A", "B", "C", "D"});

    std::set<Transition> expected = {
        // from full: consume alone, or consume-and-refill
        {"1", {"A"}, "0"},
        {"1", {"C"}, "0"},
        {"1", {"A", "B"}, "1"},
        {"1", {"A", "D"}, "1"},
        {"1", {"B", "C"}, "1"},
        {"1", {"C", "D"}, "1"},
        {"1", {}, "1"},
        // from empty: refill alone
        {"0", {"B"}, "1"},
        {"0", {"D"}, "1"},
        {"0", {}, "0"},
    };
    CHECK(a.transitions == expected);
}

TEST_CASE("consumption is paid before production, even on self-loops") {
    PetriNet net;
    net.transitions = {"t"};
    net.places["p"] = Place{{{"t", 1}}, {{"t", 1}}, 0, 1};
    PortAutomaton a = encode_place(net, "p");
    CHECK_FALSE(a.has_transition("0", {"t"}, "0"));  // cannot pay from empty
    CHECK(a.has_transition("1", {"t"}, "1"));
    CHECK(a.has_transition("0", {}, "0"));
    CHECK(a.has_transition("1", {}, "1"));
    CHECK(a.transitions.size() == 3);
}

TEST_CASE("a place with no adjacent transitions only idles") {
    PetriNet net;
    net.transitions = {"t"};
    net.places["lonely"] = Place{{}, {}, 0, 2};
    PortAutomaton a = encode_place(net, "lonely");
    CHECK(a.states == std::set<StateId>{"0", "1", "2"});
    CHECK(a.ports.empty());
    CHECK(a.transitions.size() == 3);  // one tau loop per count
}

TEST_CASE("the encoded net's semantics equals the marking-graph oracle") {
    PetriNet net = example_net();
    Connector c = encode_net(net);
    CHECK(validate_connector(c).empty());
    CHECK(c.nodes == std::set<PortName>{"A", "B", "C", "D"});
    CHECK(c.primitives.size() == 3);

    PortAutomaton viaSem = reachable(sem_connector(c, true).automaton);
    PortAutomaton oracle = marking_graph(net);
    CHECK(viaSem == oracle);  // literal equality, including state names
    CHECK(oracle.states ==
          std::set<StateId>{"(1,0,0)", "(0,0,1)", "(0,1,0)"});
    CHECK(oracle.initial == "(1,0,0)");
}

TEST_CASE("the oracle equality holds across random nets") {
    Rng rng(31);
    for (int i = 0; i < 20; ++i) {
        PetriNet net = random_net(rng);
        REQUIRE(validate_net(net).empty());
        PortAutomaton viaSem = reachable(sem_connector(encode_net(net), true).automaton);
        CHECK(viaSem == marking_graph(net));
    }
}

TEST_CASE("the marking guard throws past the cap") {
    PetriNet net = example_net();
    try {
        marking_graph(net, 2);
        FAIL("expected SizeGuard");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SizeGuard);
    }
}
