#include "copa/reconfig.hpp"

#include "copa/errors.hpp"

namespace copa {

std::string to_string(TransferVerdict v) {
    switch (v) {
        case TransferVerdict::Valid: return "VALID";
        case TransferVerdict::InvalidState: return "INVALID-STATE";
        case TransferVerdict::Ambiguous: return "AMBIGUOUS";
    }
    return "?";
}

TransferReport apply_rule(const ConnectorMorphism& rule, const ConnectorMorphism& match,
                          const StateId& currentState, std::size_t maxStates) {
    if (rule.source != match.source)
        throw Error(ErrorKind::InvalidArgument,
                    "apply_rule: rule and match have different interfaces");

    SemanticsResult hostSem = sem_connector(match.target, false, maxStates);
    if (!hostSem.automaton.states.count(currentState))
        throw Error(ErrorKind::InvalidArgument,
                    "apply_rule: unknown host state '" + currentState + "'");

    TransferReport rep;
    rep.pushoutDetail = pushout(ConnectorSpan{rule, match});
    rep.newConnector = rep.pushoutDetail.connector;
    rep.semMorphism = sem_morphism(rep.pushoutDetail.legRight, maxStates);

    PortAutomaton live = reachable(rep.semMorphism.source);
    for (const auto& [s, image] : rep.semMorphism.stateMap)
        if (image == currentState)
            rep.preimages.push_back(Preimage{s, live.states.count(s) > 0});

    std::size_t liveCount = 0;
    for (const Preimage& p : rep.preimages) liveCount += p.reachable ? 1 : 0;
    rep.verdict = liveCount == 0   ? TransferVerdict::InvalidState
                  : liveCount == 1 ? TransferVerdict::Valid
                                   : TransferVerdict::Ambiguous;
    return rep;
}

}  // namespace copa
