#include "copa/automaton.hpp"

#include <algorithm>
#include <deque>

namespace copa {

std::vector<std::string> validate_automaton(const PortAutomaton& a) {
    std::vector<std::string> report;
    if (a.initial.empty()) {
        report.push_back("initial state is empty");
    } else if (!a.states.count(a.initial)) {
        report.push_back("initial not in states: '" + a.initial + "'");
    }
    for (const StateId& q : a.states) {
        if (q.empty()) report.push_back("empty state identifier");
    }
    for (const PortName& n : a.ports) {
        if (n.empty()) report.push_back("empty port name");
    }
    for (const Transition& t : a.transitions) {
        if (!a.states.count(t.from))
            report.push_back("transition source not in states: '" + t.from + "'");
        if (!a.states.count(t.to))
            report.push_back("transition target not in states: '" + t.to + "'");
        for (const PortName& n : t.label) {
            if (!a.ports.count(n))
                report.push_back("label not subset of ports: '" + n + "' on " + t.from +
                                 " " + label_to_string(t.label) + " " + t.to);
        }
    }
    return report;
}

const PortAutomaton& final_automaton() {
    static const PortAutomaton one = [] {
        PortAutomaton a;
        a.states = {"*"};
        a.initial = "*";
        a.transitions = {Transition{"*", {}, "*"}};
        return a;
    }();
    return one;
}

PortAutomaton reachable(const PortAutomaton& a) {
    std::set<StateId> seen;
    std::deque<StateId> work;
    if (a.states.count(a.initial)) {
        seen.insert(a.initial);
        work.push_back(a.initial);
    }
    while (!work.empty()) {
        StateId q = work.front();
        work.pop_front();
        for (const Transition& t : a.transitions) {
            if (t.from == q && !seen.count(t.to)) {
                seen.insert(t.to);
                work.push_back(t.to);
            }
        }
    }
    PortAutomaton r;
    r.states = seen;
    r.ports = a.ports;
    r.initial = a.initial;
    for (const Transition& t : a.transitions) {
        if (seen.count(t.from) && seen.count(t.to)) r.transitions.insert(t);
    }
    return r;
}

std::string label_to_string(const Label& label) {
    if (label.empty()) return "{}";
    std::string s = "{";
    bool first = true;
    for (const PortName& n : label) {
        if (!first) s += ",";
        s += n;
        first = false;
    }
    s += "}";
    return s;
}

}  // namespace copa
