#include <doctest.h>

#include "copa/automaton.hpp"

using namespace copa;

namespace {

PortAutomaton two_state() {
    PortAutomaton a;
    a.states = {"q0", "q1"};
    a.ports = {"A", "B"};
    a.initial = "q0";
    a.transitions = {{"q0", {"A"}, "q1"}, {"q1", {"B"}, "q0"}};
    return a;
}

}  // namespace

TEST_CASE("a well-formed automaton validates") {
    CHECK(validate_automaton(two_state()).empty());
}

TEST_CASE("validation reports each offending element") {
    PortAutomaton a = two_state();
    a.initial = "nowhere";
    auto report = validate_automaton(a);
    REQUIRE(report.size() == 1);
    CHECK(report.front().find("nowhere") != std::string::npos);

    a = two_state();
    a.transitions.insert({"q0", {"Z"}, "q1"});
    report = validate_automaton(a);
    REQUIRE(report.size() == 1);
    CHECK(report.front().find("'Z'") != std::string::npos);

    a = two_state();
    a.transitions.insert({"ghost", {}, "q0"});
    CHECK(validate_automaton(a).size() == 1);
}

TEST_CASE("the final automaton has one state, no ports, one tau loop") {
    const PortAutomaton& one = final_automaton();
    CHECK(one.states.size() == 1);
    CHECK(one.ports.empty());
    REQUIRE(one.transitions.size() == 1);
    CHECK(one.transitions.begin()->label.empty());
    CHECK(validate_automaton(one).empty());
}

TEST_CASE("reachable prunes states and dangling transitions") {
    PortAutomaton a = two_state();
    a.states.insert("island");
    a.transitions.insert({"island", {"A"}, "island"});
    PortAutomaton r = reachable(a);
    CHECK(r.states == std::set<StateId>{"q0", "q1"});
    CHECK(r.transitions.size() == 2);
    CHECK(r.ports == a.ports);
    CHECK(reachable(r) == r);  // idempotent
}

TEST_CASE("labels print as sorted sets") {
    CHECK(label_to_string({}) == "{}");
    CHECK(label_to_string({"B", "A"}) == "{A,B}");
}
