#pragma once

#include <string>
#include <vector>

#include "copa/semantics.hpp"

namespace copa {

enum class TransferVerdict { Valid, InvalidState, Ambiguous };

std::string to_string(TransferVerdict v);

struct Preimage {
    StateId state;    // state of Sem(newConnector)
    bool reachable;   // reachable from its initial state
};

// Result of rewriting a host connector in a known semantic state. The new
// connector is the pushout of the rule against the match; its semantics maps
// back onto the host's, and the candidate continuation states are exactly
// the preimages of the current host state under that map.
struct TransferReport {
    Connector newConnector;
    PortAutMorphism semMorphism;    // Sem(newConnector) -> Sem(host)
    std::vector<Preimage> preimages;
    TransferVerdict verdict = TransferVerdict::InvalidState;
    PushoutResult pushoutDetail;
};

// rule: interface -> replacement, match: interface -> host; currentState
// names a state of Sem(host) (unpruned tuple naming). Verdict is Valid with
// exactly one reachable preimage, Ambiguous with several, InvalidState with
// none. Throws InvalidArgument if the legs have different interfaces or the
// state is unknown.
TransferReport apply_rule(const ConnectorMorphism& rule, const ConnectorMorphism& match,
                          const StateId& currentState,
                          std::size_t maxStates = kDefaultMaxStates);

}  // namespace copa
