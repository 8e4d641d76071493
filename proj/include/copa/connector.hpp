#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "copa/pullback.hpp"

namespace copa {

// A set of named primitive port automata over a shared node set. Nodes play
// the role of hypergraph vertices, primitives of hyperedges.
struct Connector {
    std::map<std::string, PortAutomaton> primitives;
    std::set<PortName> nodes;

    bool operator==(const Connector&) const = default;
};

// Structural morphism of connectors. Each source primitive carries an
// explicit witness simulation running from the mapped target primitive back
// to the source primitive; its port map must agree with the node map on the
// source primitive's ports.
struct ConnectorMorphism {
    Connector source;
    Connector target;
    std::map<std::string, std::string> primMap;  // source prim id -> target prim id
    std::map<PortName, PortName> nodeMap;        // source node -> target node
    std::map<std::string, PortAutMorphism> witnesses;  // per source prim id

    bool operator==(const ConnectorMorphism&) const = default;
};

struct ConnectorSpan {
    ConnectorMorphism left;   // f1: C0 -> C1
    ConnectorMorphism right;  // f2: C0 -> C2
};

std::vector<std::string> validate_connector(const Connector& c);
std::vector<std::string> validate_connector_morphism(const ConnectorMorphism& f);
bool is_valid_connector_morphism(const ConnectorMorphism& f);

ConnectorMorphism identity_connector_morphism(const Connector& c);
ConnectorMorphism compose_connector_morphisms(const ConnectorMorphism& f,
                                              const ConnectorMorphism& g);

// Authoring helper: synthesizes the witness simulations via a port-pinned
// backtracking search. Throws Validation when no witness exists.
ConnectorMorphism make_connector_morphism(const Connector& source, const Connector& target,
                                          const std::map<std::string, std::string>& primMap,
                                          const std::map<PortName, PortName>& nodeMap,
                                          std::uint64_t budget = kDefaultSearchBudget);

// Where each pushout primitive came from: a shared interface primitive
// (pullback of the witness cospan) or an unshared primitive of one side.
struct PrimOrigin {
    std::optional<std::string> left;   // primitive id in C1
    std::optional<std::string> right;  // primitive id in C2
};

struct PushoutResult {
    Connector connector;        // C3
    ConnectorMorphism legLeft;  // g1: C1 -> C3
    ConnectorMorphism legRight; // g2: C2 -> C3
    NameJoin nodeNames;         // nodes3 = nodes1 +_{nodes0} nodes2
    NameJoin primNames;         // primitive-id pushout
    std::map<std::string, PrimOrigin> origins;  // per C3 primitive id
};

// Gluing of two connectors along a shared interface connector. Shared
// primitives are replaced by the pullback of their witness cospan, unshared
// primitives carried over (ports renamed into the node pushout). Requires
// injective primitive maps on both legs.
PushoutResult pushout(const ConnectorSpan& s);

}  // namespace copa
