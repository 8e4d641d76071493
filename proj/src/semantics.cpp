#include "copa/semantics.hpp"

#include <algorithm>

#include "copa/errors.hpp"

namespace copa {

std::string tuple_state(const std::vector<StateId>& components) {
    std::string s = "(";
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) s += ",";
        s += components[i];
    }
    return s + ")";
}

namespace {

Label intersect(const Label& a, const Label& b) {
    Label out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.begin()));
    return out;
}

}  // namespace

SemanticsResult sem_connector(const Connector& c, bool prune, std::size_t maxStates) {
    auto report = validate_connector(c);
    if (!report.empty())
        throw Error(ErrorKind::Validation, "sem_connector: invalid connector: " + report.front());

    SemanticsResult sem;
    for (const auto& [id, _] : c.primitives) sem.primitiveOrder.push_back(id);

    std::vector<const PortAutomaton*> prims;
    for (const std::string& id : sem.primitiveOrder) prims.push_back(&c.primitives.at(id));

    std::size_t count = 1;
    for (const PortAutomaton* p : prims) {
        if (p->states.empty() || count > maxStates / std::max<std::size_t>(p->states.size(), 1)) {
            if (!p->states.empty())
                throw Error(ErrorKind::SizeGuard,
                            "sem_connector: unpruned state count exceeds cap of " +
                                std::to_string(maxStates));
        }
        count *= std::max<std::size_t>(p->states.size(), 1);
    }
    if (count > maxStates)
        throw Error(ErrorKind::SizeGuard, "sem_connector: unpruned state count " +
                                              std::to_string(count) + " exceeds cap of " +
                                              std::to_string(maxStates));

    sem.automaton.ports = c.nodes;

    // All state tuples.
    std::vector<StateId> tuple(prims.size());
    auto buildStates = [&](auto&& self, std::size_t i) -> void {
        if (i == prims.size()) {
            StateId s = tuple_state(tuple);
            sem.automaton.states.insert(s);
            sem.stateComponents[s] = tuple;
            return;
        }
        for (const StateId& q : prims[i]->states) {
            tuple[i] = q;
            self(self, i + 1);
        }
    };
    buildStates(buildStates, 0);

    {
        std::vector<StateId> init;
        for (const PortAutomaton* p : prims) init.push_back(p->initial);
        sem.automaton.initial = tuple_state(init);
    }

    // Tuple transitions: every primitive takes a step and each pair of steps
    // agrees on shared nodes.
    std::vector<std::vector<Transition>> steps;
    for (const PortAutomaton* p : prims)
        steps.emplace_back(p->transitions.begin(), p->transitions.end());

    std::vector<const Transition*> chosen(prims.size(), nullptr);
    auto buildTransitions = [&](auto&& self, std::size_t j) -> void {
        if (j == prims.size()) {
            std::vector<StateId> from, to;
            Label lbl;
            for (std::size_t k = 0; k < prims.size(); ++k) {
                from.push_back(chosen[k]->from);
                to.push_back(chosen[k]->to);
                lbl.insert(chosen[k]->label.begin(), chosen[k]->label.end());
            }
            sem.automaton.transitions.insert(
                Transition{tuple_state(from), lbl, tuple_state(to)});
            return;
        }
        for (const Transition& t : steps[j]) {
            bool ok = true;
            for (std::size_t k = 0; k < j && ok; ++k)
                ok = intersect(t.label, prims[k]->ports) == intersect(chosen[k]->label, prims[j]->ports);
            if (!ok) continue;
            chosen[j] = &t;
            self(self, j + 1);
        }
    };
    if (prims.empty()) {
        // Vacuous rule instance: the empty tuple with a single tau step.
        sem.automaton.transitions.insert(Transition{sem.automaton.initial, {}, sem.automaton.initial});
    } else {
        buildTransitions(buildTransitions, 0);
    }

    if (prune) {
        sem.automaton = reachable(sem.automaton);
        std::map<StateId, std::vector<StateId>> kept;
        for (const StateId& s : sem.automaton.states) kept[s] = sem.stateComponents.at(s);
        sem.stateComponents = std::move(kept);
    }
    return sem;
}

PortAutMorphism sem_morphism(const ConnectorMorphism& f, std::size_t maxStates) {
    auto report = validate_connector_morphism(f);
    if (!report.empty())
        throw Error(ErrorKind::Validation, "sem_morphism: invalid morphism: " + report.front());

    SemanticsResult semSrc = sem_connector(f.source, false, maxStates);
    SemanticsResult semTgt = sem_connector(f.target, false, maxStates);

    std::map<std::string, std::size_t> tgtIndex;
    for (std::size_t i = 0; i < semTgt.primitiveOrder.size(); ++i)
        tgtIndex[semTgt.primitiveOrder[i]] = i;

    PortAutMorphism m{semTgt.automaton, semSrc.automaton, {}, {}};
    for (const auto& [state, comps] : semTgt.stateComponents) {
        std::vector<StateId> mapped;
        for (const std::string& a : semSrc.primitiveOrder) {
            const StateId& component = comps[tgtIndex.at(f.primMap.at(a))];
            mapped.push_back(f.witnesses.at(a).stateMap.at(component));
        }
        m.stateMap[state] = tuple_state(mapped);
    }
    for (const PortName& n : f.source.nodes) m.portMap[n] = f.nodeMap.at(n);
    return m;
}

CompositionalityReport check_compositionality(const ConnectorSpan& s, std::size_t maxStates) {
    CompositionalityReport rep;

    PushoutResult po = pushout(s);
    SemanticsResult lhs = sem_connector(po.connector, false, maxStates);
    SemanticsResult sem1 = sem_connector(s.left.target, false, maxStates);
    SemanticsResult sem2 = sem_connector(s.right.target, false, maxStates);

    PortAutMorphism sf1 = sem_morphism(s.left, maxStates);
    PortAutMorphism sf2 = sem_morphism(s.right, maxStates);
    PullbackResult rhs = pullback(Cospan{sf1, sf2});

    rep.lhs = lhs.automaton;
    rep.rhs = rhs.apex;

    if (lhs.automaton.ports != rhs.apex.ports) {
        rep.detail = "port sets differ between Sem(pushout) and the semantic pullback";
        return rep;
    }

    std::map<std::string, std::size_t> idx1, idx2;
    for (std::size_t i = 0; i < sem1.primitiveOrder.size(); ++i) idx1[sem1.primitiveOrder[i]] = i;
    for (std::size_t i = 0; i < sem2.primitiveOrder.size(); ++i) idx2[sem2.primitiveOrder[i]] = i;

    // Canonical regrouping: a pullback state is a pair of tuples; flatten it
    // into the pushout's primitive order, pairing the shared coordinates.
    std::map<StateId, StateId> rhsToLhs;
    for (const auto& [state, pair] : rhs.statePairs) {
        const std::vector<StateId>& comps1 = sem1.stateComponents.at(pair.first);
        const std::vector<StateId>& comps2 = sem2.stateComponents.at(pair.second);
        std::vector<StateId> flat;
        for (const std::string& r : lhs.primitiveOrder) {
            const PrimOrigin& origin = po.origins.at(r);
            if (origin.left && origin.right)
                flat.push_back(pair_state(comps1[idx1.at(*origin.left)],
                                          comps2[idx2.at(*origin.right)]));
            else if (origin.left)
                flat.push_back(comps1[idx1.at(*origin.left)]);
            else
                flat.push_back(comps2[idx2.at(*origin.right)]);
        }
        rhsToLhs[state] = tuple_state(flat);
    }

    std::set<StateId> image;
    for (const auto& [_, v] : rhsToLhs) image.insert(v);
    if (image.size() != rhsToLhs.size() || image != lhs.automaton.states) {
        rep.detail = "state regrouping is not a bijection onto Sem(pushout) states";
        return rep;
    }
    if (rhsToLhs.at(rhs.apex.initial) != lhs.automaton.initial) {
        rep.detail = "initial states do not correspond";
        return rep;
    }

    std::set<Transition> renamed;
    for (const Transition& t : rhs.apex.transitions)
        renamed.insert(Transition{rhsToLhs.at(t.from), t.label, rhsToLhs.at(t.to)});
    if (renamed != lhs.automaton.transitions) {
        for (const Transition& t : renamed)
            if (!lhs.automaton.transitions.count(t)) {
                rep.detail = "pullback transition missing from Sem(pushout): " + t.from + " " +
                             label_to_string(t.label) + " " + t.to;
                return rep;
            }
        for (const Transition& t : lhs.automaton.transitions)
            if (!renamed.count(t)) {
                rep.detail = "Sem(pushout) transition missing from pullback: " + t.from + " " +
                             label_to_string(t.label) + " " + t.to;
                return rep;
            }
    }

    rep.pass = true;
    rep.isoRhsToLhs = PortAutMorphism{rhs.apex, lhs.automaton, rhsToLhs, {}};
    rep.isoLhsToRhs = PortAutMorphism{lhs.automaton, rhs.apex, {}, {}};
    for (const auto& [r, l] : rhsToLhs) rep.isoLhsToRhs.stateMap[l] = r;
    for (const PortName& n : lhs.automaton.ports) {
        rep.isoRhsToLhs.portMap[n] = n;
        rep.isoLhsToRhs.portMap[n] = n;
    }
    return rep;
}

}  // namespace copa
