#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "copa/connector.hpp"

namespace copa {

// A bounded place-transition net. Arcs are weighted; "in" arcs produce
// tokens into the place, "out" arcs consume from it.
struct Place {
    std::map<std::string, unsigned> in;   // producing transition -> weight
    std::map<std::string, unsigned> out;  // consuming transition -> weight
    unsigned tokens = 0;
    unsigned capacity = 1;

    bool operator==(const Place&) const = default;
};

struct PetriNet {
    std::set<std::string> transitions;
    std::map<std::string, Place> places;

    bool operator==(const PetriNet&) const = default;
};

std::vector<std::string> validate_net(const PetriNet& net);

// One place as a port automaton: states are token counts 0..capacity, ports
// the adjacent transitions. A step fires a set T of adjacent transitions;
// it is allowed when the count can pay the consumed weight and the final
// count stays within capacity. T = {} gives a tau loop on every state.
PortAutomaton encode_place(const PetriNet& net, const std::string& placeId);

// The net as a connector: transitions become nodes, places primitives.
Connector encode_net(const PetriNet& net);

inline constexpr std::size_t kDefaultMaxMarkings = 1'000'000;

// Independent oracle for the net's behavior, built by marking-space
// exploration rather than through the connector semantics: states are the
// reachable global markings (named as count tuples over the sorted place
// ids), steps fire sets of place-adjacent transitions enabled at every
// place. Throws SizeGuard past maxMarkings.
PortAutomaton marking_graph(const PetriNet& net, std::size_t maxMarkings = kDefaultMaxMarkings);

// The token-ring protocol as a net: a center place feeding the A-B and C-D
// paths; its marking graph matches the ring connector's behavior.
PetriNet example_net();

}  // namespace copa
