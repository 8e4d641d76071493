#pragma once

#include <cstddef>

#include "copa/connector.hpp"

namespace copa {

inline constexpr std::size_t kDefaultMaxStates = 1'000'000;

// Composite automaton of a connector: states are ordered tuples over the
// primitive state sets (primitive ids in lexicographic order), ports are the
// connector's nodes, and a tuple step exists iff every primitive takes a
// transition and all activity on shared nodes synchronizes.
struct SemanticsResult {
    PortAutomaton automaton;
    std::vector<std::string> primitiveOrder;
    std::map<StateId, std::vector<StateId>> stateComponents;
};

// Throws SizeGuard if the unpruned state count exceeds maxStates. With
// prune set, restricts to states reachable from the initial tuple.
SemanticsResult sem_connector(const Connector& c, bool prune,
                              std::size_t maxStates = kDefaultMaxStates);

// Contravariant action on morphisms: Sem(f): Sem(target) -> Sem(source),
// projecting tuples onto the image coordinates and applying the witness
// state maps; the port map is the node map used backward.
PortAutMorphism sem_morphism(const ConnectorMorphism& f,
                             std::size_t maxStates = kDefaultMaxStates);

struct CompositionalityReport {
    bool pass = false;
    std::string detail;            // on failure: first structural discrepancy
    PortAutomaton lhs;             // Sem(pushout(span))
    PortAutomaton rhs;             // pullback of the Sem cospan
    PortAutMorphism isoLhsToRhs;   // canonical regrouping, when pass
    PortAutMorphism isoRhsToLhs;
};

// Checks that Sem maps the span's pushout to the pullback of the semantic
// cospan, up to the canonical tuple-regrouping bijection (names compared
// exactly: both sides use the same set-pushout representatives).
CompositionalityReport check_compositionality(const ConnectorSpan& s,
                                              std::size_t maxStates = kDefaultMaxStates);

std::string tuple_state(const std::vector<StateId>& components);

}  // namespace copa
