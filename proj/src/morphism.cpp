#include "copa/morphism.hpp"

#include <algorithm>

#include "copa/errors.hpp"

namespace copa {

namespace {

Label intersect(const Label& a, const Label& b) {
    Label out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.begin()));
    return out;
}

// Does some target transition f(from) -S2-> f(to) satisfy
// imageN2 `intersect` label == portImage(S2)?
bool has_matching_target(const PortAutomaton& target,
                         const std::map<PortName, PortName>& portMap, const Label& imageN2,
                         const StateId& from, const Label& label, const StateId& to) {
    Label lhs = intersect(imageN2, label);
    for (const Transition& u : target.transitions) {
        if (u.from != from || u.to != to) continue;
        Label rhs;
        for (const PortName& n : u.label) rhs.insert(portMap.at(n));
        if (rhs == lhs) return true;
    }
    return false;
}

Label port_map_image(const std::map<PortName, PortName>& portMap) {
    Label img;
    for (const auto& [n2, n1] : portMap) img.insert(n1);
    return img;
}

// Backtracking search over (portMap, stateMap) pairs in lexicographic order.
// Shared by find_simulation, enumerate_morphisms and the witness synthesis
// helper. Counts examined candidate assignments against a budget.
struct MorphismSearch {
    const PortAutomaton& src;
    const PortAutomaton& tgt;
    std::uint64_t budget;
    std::uint64_t spent = 0;
    bool collectAll = false;
    std::vector<PortAutMorphism> found;

    std::vector<StateId> srcStates;   // assignment order
    std::vector<StateId> tgtStates;
    std::vector<PortName> tgtPorts;   // portMap domain
    std::vector<PortName> srcPorts;   // portMap codomain candidates

    MorphismSearch(const PortAutomaton& s, const PortAutomaton& t, std::uint64_t b)
        : src(s), tgt(t), budget(b) {
        srcStates.assign(s.states.begin(), s.states.end());
        // Assign the initial state first so its constraint prunes early.
        auto it = std::find(srcStates.begin(), srcStates.end(), s.initial);
        if (it != srcStates.end()) std::rotate(srcStates.begin(), it, it + 1);
        tgtStates.assign(t.states.begin(), t.states.end());
        tgtPorts.assign(t.ports.begin(), t.ports.end());
        srcPorts.assign(s.ports.begin(), s.ports.end());
    }

    void charge() {
        if (++spent > budget)
            throw Error(ErrorKind::Budget, "simulation search budget exceeded");
    }

    bool run() {
        std::map<PortName, PortName> portMap;
        return enumeratePorts(0, portMap);
    }

    bool runFixedPorts(const std::map<PortName, PortName>& portMap) {
        std::map<StateId, StateId> stateMap;
        return assignStates(0, portMap, port_map_image(portMap), stateMap);
    }

    bool enumeratePorts(std::size_t i, std::map<PortName, PortName>& portMap) {
        if (i == tgtPorts.size()) {
            std::map<StateId, StateId> stateMap;
            return assignStates(0, portMap, port_map_image(portMap), stateMap);
        }
        // No total map exists into an empty port set.
        if (srcPorts.empty()) return false;
        for (const PortName& n1 : srcPorts) {
            portMap[tgtPorts[i]] = n1;
            if (enumeratePorts(i + 1, portMap)) return true;
            portMap.erase(tgtPorts[i]);
        }
        return false;
    }

    // Partial-assignment consistency: every source transition whose endpoints
    // are both mapped must already have a qualifying target transition.
    bool consistent(const std::map<PortName, PortName>& portMap, const Label& imageN2,
                    const std::map<StateId, StateId>& stateMap, const StateId& justAssigned) {
        for (const Transition& t : src.transitions) {
            if (t.from != justAssigned && t.to != justAssigned) continue;
            auto f = stateMap.find(t.from);
            auto g = stateMap.find(t.to);
            if (f == stateMap.end() || g == stateMap.end()) continue;
            if (!has_matching_target(tgt, portMap, imageN2, f->second, t.label, g->second))
                return false;
        }
        return true;
    }

    bool assignStates(std::size_t i, const std::map<PortName, PortName>& portMap,
                      const Label& imageN2, std::map<StateId, StateId>& stateMap) {
        if (i == srcStates.size()) {
            PortAutMorphism m{src, tgt, stateMap, portMap};
            if (collectAll) {
                found.push_back(std::move(m));
                return false;  // keep searching
            }
            found.push_back(std::move(m));
            return true;
        }
        const StateId& q = srcStates[i];
        for (const StateId& v : tgtStates) {
            charge();
            if (q == src.initial && v != tgt.initial) continue;
            stateMap[q] = v;
            if (consistent(portMap, imageN2, stateMap, q) &&
                assignStates(i + 1, portMap, imageN2, stateMap))
                return true;
            stateMap.erase(q);
        }
        return false;
    }
};

}  // namespace

Label PortAutMorphism::port_image(const Label& targetPorts) const {
    Label out;
    for (const PortName& n : targetPorts) out.insert(portMap.at(n));
    return out;
}

std::vector<std::string> validate_morphism(const PortAutMorphism& f) {
    std::vector<std::string> report;
    for (const StateId& q : f.source.states) {
        auto it = f.stateMap.find(q);
        if (it == f.stateMap.end())
            report.push_back("stateMap not total: missing '" + q + "'");
        else if (!f.target.states.count(it->second))
            report.push_back("stateMap image not a target state: '" + it->second + "'");
    }
    for (const auto& [q, v] : f.stateMap) {
        if (!f.source.states.count(q))
            report.push_back("stateMap domain not a source state: '" + q + "'");
    }
    for (const PortName& n : f.target.ports) {
        auto it = f.portMap.find(n);
        if (it == f.portMap.end())
            report.push_back("portMap not total: missing '" + n + "'");
        else if (!f.source.ports.count(it->second))
            report.push_back("portMap image not a source port: '" + it->second + "'");
    }
    for (const auto& [n2, n1] : f.portMap) {
        if (!f.target.ports.count(n2))
            report.push_back("portMap domain not a target port: '" + n2 + "'");
    }
    if (!report.empty()) return report;

    if (f.stateMap.at(f.source.initial) != f.target.initial)
        report.push_back("initial state not preserved: '" + f.source.initial + "' maps to '" +
                         f.stateMap.at(f.source.initial) + "', expected '" + f.target.initial +
                         "'");

    Label imageN2 = port_map_image(f.portMap);
    for (const Transition& t : f.source.transitions) {
        if (!has_matching_target(f.target, f.portMap, imageN2, f.stateMap.at(t.from), t.label,
                                 f.stateMap.at(t.to)))
            report.push_back("no qualifying target transition for " + t.from + " " +
                             label_to_string(t.label) + " " + t.to);
    }
    return report;
}

bool is_valid_morphism(const PortAutMorphism& f) { return validate_morphism(f).empty(); }

PortAutMorphism identity_morphism(const PortAutomaton& a) {
    PortAutMorphism id{a, a, {}, {}};
    for (const StateId& q : a.states) id.stateMap[q] = q;
    for (const PortName& n : a.ports) id.portMap[n] = n;
    return id;
}

PortAutMorphism compose_morphisms(const PortAutMorphism& f, const PortAutMorphism& g) {
    if (f.target != g.source)
        throw Error(ErrorKind::Mismatch, "compose_morphisms: f.target != g.source");
    PortAutMorphism h{f.source, g.target, {}, {}};
    for (const auto& [q, v] : f.stateMap) h.stateMap[q] = g.stateMap.at(v);
    for (const auto& [n3, n2] : g.portMap) h.portMap[n3] = f.portMap.at(n2);
    return h;
}

PortAutMorphism terminal_morphism(const PortAutomaton& a) {
    PortAutMorphism t{a, final_automaton(), {}, {}};
    for (const StateId& q : a.states) t.stateMap[q] = final_automaton().initial;
    return t;
}

std::optional<PortAutMorphism> find_simulation(const PortAutomaton& a0, const PortAutomaton& a1,
                                               std::uint64_t budget) {
    MorphismSearch search(a0, a1, budget);
    if (search.run()) return search.found.front();
    return std::nullopt;
}

std::optional<PortAutMorphism> find_simulation_fixed_ports(
    const PortAutomaton& a0, const PortAutomaton& a1,
    const std::map<PortName, PortName>& portMap, std::uint64_t budget) {
    for (const PortName& n : a1.ports)
        if (!portMap.count(n) || !a0.ports.count(portMap.at(n)))
            throw Error(ErrorKind::InvalidArgument,
                        "fixed port map is not total into the source ports");
    MorphismSearch search(a0, a1, budget);
    if (search.runFixedPorts(portMap)) return search.found.front();
    return std::nullopt;
}

std::vector<PortAutMorphism> enumerate_morphisms(const PortAutomaton& a, const PortAutomaton& b,
                                                 std::uint64_t budget) {
    MorphismSearch search(a, b, budget);
    search.collectAll = true;
    search.run();
    return search.found;
}

namespace {

// Isomorphism search: bijective port and state maps under which the
// transition sets correspond exactly.
struct IsoSearch {
    const PortAutomaton& a;
    const PortAutomaton& b;
    std::uint64_t budget;
    std::uint64_t spent = 0;

    std::vector<PortName> aPorts, bPorts;
    std::vector<StateId> aStates, bStates;
    std::map<PortName, PortName> rename;  // a ports -> b ports
    std::map<StateId, StateId> stateMap;  // a states -> b states
    std::set<StateId> usedTargets;

    IsoSearch(const PortAutomaton& x, const PortAutomaton& y, std::uint64_t bud)
        : a(x), b(y), budget(bud) {
        aPorts.assign(a.ports.begin(), a.ports.end());
        bPorts.assign(b.ports.begin(), b.ports.end());
        aStates.assign(a.states.begin(), a.states.end());
        auto it = std::find(aStates.begin(), aStates.end(), a.initial);
        if (it != aStates.end()) std::rotate(aStates.begin(), it, it + 1);
        bStates.assign(b.states.begin(), b.states.end());
    }

    void charge() {
        if (++spent > budget)
            throw Error(ErrorKind::Budget, "isomorphism search budget exceeded");
    }

    bool run() {
        if (a.states.size() != b.states.size() || a.ports.size() != b.ports.size() ||
            a.transitions.size() != b.transitions.size())
            return false;
        std::vector<bool> used(bPorts.size(), false);
        return assignPorts(0, used);
    }

    bool assignPorts(std::size_t i, std::vector<bool>& used) {
        if (i == aPorts.size()) return assignStates(0);
        for (std::size_t j = 0; j < bPorts.size(); ++j) {
            if (used[j]) continue;
            charge();
            rename[aPorts[i]] = bPorts[j];
            used[j] = true;
            if (assignPorts(i + 1, used)) return true;
            used[j] = false;
            rename.erase(aPorts[i]);
        }
        return false;
    }

    bool transitionsMatch(const StateId& justAssigned) {
        for (const Transition& t : a.transitions) {
            if (t.from != justAssigned && t.to != justAssigned) continue;
            auto f = stateMap.find(t.from);
            auto g = stateMap.find(t.to);
            if (f == stateMap.end() || g == stateMap.end()) continue;
            Label lbl;
            for (const PortName& n : t.label) lbl.insert(rename.at(n));
            if (!b.has_transition(f->second, lbl, g->second)) return false;
        }
        return true;
    }

    bool assignStates(std::size_t i) {
        if (i == aStates.size()) return true;  // counts equal => bijection on transitions
        const StateId& q = aStates[i];
        for (const StateId& v : bStates) {
            if (usedTargets.count(v)) continue;
            charge();
            if (q == a.initial && v != b.initial) continue;
            stateMap[q] = v;
            usedTargets.insert(v);
            if (transitionsMatch(q) && assignStates(i + 1)) return true;
            usedTargets.erase(v);
            stateMap.erase(q);
        }
        return false;
    }
};

}  // namespace

std::optional<std::pair<PortAutMorphism, PortAutMorphism>> check_isomorphic(
    const PortAutomaton& a, const PortAutomaton& b, std::uint64_t budget) {
    IsoSearch search(a, b, budget);
    if (!search.run()) return std::nullopt;

    PortAutMorphism f{a, b, search.stateMap, {}};
    PortAutMorphism g{b, a, {}, {}};
    for (const auto& [na, nb] : search.rename) {
        f.portMap[nb] = na;  // backward map N_b -> N_a
        g.portMap[na] = nb;
    }
    for (const auto& [qa, qb] : search.stateMap) g.stateMap[qb] = qa;
    return std::make_pair(f, g);
}

}  // namespace copa
