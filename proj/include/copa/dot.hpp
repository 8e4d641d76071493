#pragma once

#include <string>

#include "copa/connector.hpp"

namespace copa {

// Graphviz renderings. Automaton transitions are labeled "{A,B}", the empty
// label as the tau symbol. Connectors render as bipartite graphs of node
// vertices and primitive boxes; hideInternal suppresses "_"-prefixed nodes
// from the drawing only (never from semantics).
std::string automaton_to_dot(const std::string& name, const PortAutomaton& a);
std::string connector_to_dot(const std::string& name, const Connector& c,
                             bool hideInternal = false);

}  // namespace copa
