#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace copa {

// Port names and state ids are plain identifier strings. Composite objects
// use ':'-qualified port names ("L:A") and tuple-notation states ("(a,b)").
using PortName = std::string;
using StateId = std::string;

// A transition label is the set of ports firing together; the empty set is
// a tau-step (internal activity, no observable firing).
using Label = std::set<PortName>;

struct Transition {
    StateId from;
    Label label;
    StateId to;

    auto operator<=>(const Transition&) const = default;
};

// Finite-state labeled transition system whose labels are sets of port
// names. Immutable by convention: construct once, never mutate shared values.
struct PortAutomaton {
    std::set<StateId> states;
    std::set<PortName> ports;
    std::set<Transition> transitions;
    StateId initial;

    bool operator==(const PortAutomaton&) const = default;

    bool has_transition(const StateId& from, const Label& label, const StateId& to) const {
        return transitions.count(Transition{from, label, to}) > 0;
    }
};

// Report-style validation: empty result means valid, each entry names the
// offending element.
std::vector<std::string> validate_automaton(const PortAutomaton& a);

// The final object: one state, no ports, a single tau self-loop. Exactly one
// morphism exists from any port automaton into it.
const PortAutomaton& final_automaton();

// Restriction to the states reachable from the initial state (tau steps
// included); ports unchanged. Idempotent.
PortAutomaton reachable(const PortAutomaton& a);

std::string label_to_string(const Label& label);

}  // namespace copa
