#pragma once

#include <map>
#include <string>

#include "copa/petri.hpp"
#include "copa/semantics.hpp"

namespace copa {

// Named objects addressable by CLI commands. Later blocks in a file may
// reference earlier entries (e.g. `primitive f : automaton buf;`).
struct Workspace {
    std::map<std::string, PortAutomaton> automata;
    std::map<std::string, Connector> connectors;
    std::map<std::string, PortAutMorphism> morphisms;
    std::map<std::string, ConnectorMorphism> connectorMorphisms;
    std::map<std::string, PetriNet> nets;
};

// Parses a sequence of blocks:
//   automaton <name> { states q0 q1; ports A B; initial q0; q0 -{A}-> q1; }
//   connector <name> { nodes A B; primitive f : EmptyFIFO(A,B);
//                      primitive g : automaton <name>; }
//   morphism <name> : <aut> -> <aut> { states q0 -> p0; ports A -> A; }
//   cmorphism <name> : <conn> -> <conn> { primitives f -> g; nodes A -> B;
//                      witness f { states q0 -> p0; ports A -> A; } }
//   net <name> { transitions A B; place p { in: A; out: B*2; tokens: 0; cap: 1 } }
// Port maps are written target-side name first ("ports X -> Y" sends the
// codomain port X back to the domain port Y). Identifiers may be quoted
// ("(q0,q1)") when they contain punctuation. Missing cmorphism witnesses
// are synthesized by simulation search. Throws Parse with line:column on
// syntax errors and Validation when a decoded object fails its validator.
void parse_text(const std::string& text, Workspace& ws);
void parse_file(const std::string& path, Workspace& ws);

std::string serialize_automaton(const std::string& name, const PortAutomaton& a);
std::string serialize_connector(const std::string& name, const Connector& c,
                                const Workspace& ws);
std::string serialize_morphism(const std::string& name, const PortAutMorphism& f,
                               const std::string& sourceName, const std::string& targetName);
std::string serialize_connector_morphism(const std::string& name, const ConnectorMorphism& f,
                                         const std::string& sourceName,
                                         const std::string& targetName);
std::string serialize_net(const std::string& name, const PetriNet& n);

// The pinned example objects under stable names (ring, ring_behavior,
// ring_behavior_full, phase/seq_left/seq_right and their morphisms,
// sample_sim, iface/patch/host with insert_rule/insert_match, ring_net).
Workspace builtin_workspace();

}  // namespace copa
