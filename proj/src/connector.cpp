#include "copa/connector.hpp"

#include <algorithm>

#include "copa/errors.hpp"

namespace copa {

std::vector<std::string> validate_connector(const Connector& c) {
    std::vector<std::string> report;
    for (const auto& [id, aut] : c.primitives) {
        if (id.empty()) report.push_back("empty primitive id");
        for (const std::string& v : validate_automaton(aut))
            report.push_back("primitive '" + id + "': " + v);
        for (const PortName& n : aut.ports)
            if (!c.nodes.count(n))
                report.push_back("primitive '" + id + "' port '" + n + "' not in node set");
    }
    return report;
}

std::vector<std::string> validate_connector_morphism(const ConnectorMorphism& f) {
    std::vector<std::string> report;
    for (const auto& [id, _] : f.source.primitives) {
        auto it = f.primMap.find(id);
        if (it == f.primMap.end()) {
            report.push_back("primMap not total: missing '" + id + "'");
            continue;
        }
        if (!f.target.primitives.count(it->second))
            report.push_back("primMap image not a target primitive: '" + it->second + "'");
    }
    for (const PortName& n : f.source.nodes) {
        auto it = f.nodeMap.find(n);
        if (it == f.nodeMap.end())
            report.push_back("nodeMap not total: missing '" + n + "'");
        else if (!f.target.nodes.count(it->second))
            report.push_back("nodeMap image not a target node: '" + it->second + "'");
    }
    if (!report.empty()) return report;

    for (const auto& [id, aut] : f.source.primitives) {
        auto wit = f.witnesses.find(id);
        if (wit == f.witnesses.end()) {
            report.push_back("missing witness for primitive '" + id + "'");
            continue;
        }
        const PortAutMorphism& w = wit->second;
        if (w.source != f.target.primitives.at(f.primMap.at(id)))
            report.push_back("witness for '" + id + "' does not start at the mapped primitive");
        if (w.target != aut)
            report.push_back("witness for '" + id + "' does not end at the source primitive");
        for (const std::string& v : validate_morphism(w))
            report.push_back("witness for '" + id + "': " + v);
        for (const PortName& n : aut.ports) {
            auto p = w.portMap.find(n);
            if (p != w.portMap.end() && p->second != f.nodeMap.at(n))
                report.push_back("witness for '" + id + "' disagrees with nodeMap at port '" + n +
                                 "'");
        }
    }
    return report;
}

bool is_valid_connector_morphism(const ConnectorMorphism& f) {
    return validate_connector_morphism(f).empty();
}

ConnectorMorphism identity_connector_morphism(const Connector& c) {
    ConnectorMorphism id{c, c, {}, {}, {}};
    for (const auto& [pid, aut] : c.primitives) {
        id.primMap[pid] = pid;
        id.witnesses[pid] = identity_morphism(aut);
    }
    for (const PortName& n : c.nodes) id.nodeMap[n] = n;
    return id;
}

ConnectorMorphism compose_connector_morphisms(const ConnectorMorphism& f,
                                              const ConnectorMorphism& g) {
    if (f.target != g.source)
        throw Error(ErrorKind::Mismatch, "compose_connector_morphisms: f.target != g.source");
    ConnectorMorphism h{f.source, g.target, {}, {}, {}};
    for (const auto& [a, b] : f.primMap) {
        h.primMap[a] = g.primMap.at(b);
        // witness runs backward: g's witness at f(a), then f's witness at a.
        h.witnesses[a] = compose_morphisms(g.witnesses.at(b), f.witnesses.at(a));
    }
    for (const auto& [n, m] : f.nodeMap) h.nodeMap[n] = g.nodeMap.at(m);
    return h;
}

ConnectorMorphism make_connector_morphism(const Connector& source, const Connector& target,
                                          const std::map<std::string, std::string>& primMap,
                                          const std::map<PortName, PortName>& nodeMap,
                                          std::uint64_t budget) {
    ConnectorMorphism f{source, target, primMap, nodeMap, {}};
    for (const auto& [id, aut] : source.primitives) {
        auto it = primMap.find(id);
        if (it == primMap.end() || !target.primitives.count(it->second))
            throw Error(ErrorKind::InvalidArgument,
                        "primMap missing or invalid for primitive '" + id + "'");
        const PortAutomaton& mapped = target.primitives.at(it->second);
        std::map<PortName, PortName> pinned;
        for (const PortName& n : aut.ports) {
            auto nm = nodeMap.find(n);
            if (nm == nodeMap.end())
                throw Error(ErrorKind::InvalidArgument, "nodeMap missing node '" + n + "'");
            if (!mapped.ports.count(nm->second))
                throw Error(ErrorKind::Validation,
                            "no witness possible for '" + id + "': node image '" + nm->second +
                                "' is not a port of the mapped primitive");
            pinned[n] = nm->second;
        }
        auto w = find_simulation_fixed_ports(mapped, aut, pinned, budget);
        if (!w)
            throw Error(ErrorKind::Validation,
                        "no witness simulation exists for primitive '" + id + "'");
        f.witnesses[id] = *w;
    }
    return f;
}

namespace {

PortAutomaton rename_ports(const PortAutomaton& a,
                           const std::map<PortName, PortName>& rep) {
    PortAutomaton out;
    out.states = a.states;
    out.initial = a.initial;
    for (const PortName& n : a.ports) out.ports.insert(rep.at(n));
    for (const Transition& t : a.transitions) {
        Label lbl;
        for (const PortName& n : t.label) lbl.insert(rep.at(n));
        out.transitions.insert(Transition{t.from, lbl, t.to});
    }
    return out;
}

bool injective(const std::map<std::string, std::string>& m) {
    std::set<std::string> seen;
    for (const auto& [_, v] : m)
        if (!seen.insert(v).second) return false;
    return true;
}

}  // namespace

PushoutResult pushout(const ConnectorSpan& s) {
    const ConnectorMorphism& f1 = s.left;
    const ConnectorMorphism& f2 = s.right;
    if (f1.source != f2.source)
        throw Error(ErrorKind::InvalidArgument, "invalid span: legs have different sources");
    if (!injective(f1.primMap) || !injective(f2.primMap))
        throw Error(ErrorKind::InvalidArgument,
                    "non-injective primMap: pushout requires monic legs on primitives");
    for (const ConnectorMorphism* f : {&f1, &f2}) {
        auto rep = validate_connector_morphism(*f);
        if (!rep.empty())
            throw Error(ErrorKind::Validation, "invalid span leg: " + rep.front());
    }

    const Connector& c0 = f1.source;
    const Connector& c1 = f1.target;
    const Connector& c2 = f2.target;

    PushoutResult po;
    {
        std::vector<std::pair<std::string, std::string>> idents;
        for (const PortName& n0 : c0.nodes)
            idents.emplace_back(f1.nodeMap.at(n0), f2.nodeMap.at(n0));
        po.nodeNames = join_names(c1.nodes, c2.nodes, idents);
    }
    {
        std::vector<std::pair<std::string, std::string>> idents;
        std::set<std::string> ids1, ids2;
        for (const auto& [id, _] : c1.primitives) ids1.insert(id);
        for (const auto& [id, _] : c2.primitives) ids2.insert(id);
        for (const auto& [id, _] : c0.primitives)
            idents.emplace_back(f1.primMap.at(id), f2.primMap.at(id));
        po.primNames = join_names(ids1, ids2, idents);
    }

    po.connector.nodes = po.nodeNames.names;
    po.legLeft = ConnectorMorphism{c1, {}, {}, {}, {}};
    po.legRight = ConnectorMorphism{c2, {}, {}, {}, {}};
    for (const PortName& n : c1.nodes) po.legLeft.nodeMap[n] = po.nodeNames.leftRep.at(n);
    for (const PortName& n : c2.nodes) po.legRight.nodeMap[n] = po.nodeNames.rightRep.at(n);

    // Interface primitive -> (image in C1, image in C2); monic legs make the
    // class of a shared primitive exactly this pair.
    std::map<std::string, std::string> sharedLeft;  // C1 prim id -> C0 prim id
    for (const auto& [a0, _] : c0.primitives) sharedLeft[f1.primMap.at(a0)] = a0;

    for (const auto& [id1, aut1] : c1.primitives) {
        std::string rep = po.primNames.leftRep.at(id1);
        auto shared = sharedLeft.find(id1);
        if (shared != sharedLeft.end()) {
            const std::string& a0 = shared->second;
            const std::string& id2 = f2.primMap.at(a0);
            // The pullback of the witness cospan, ports named by the
            // node pushout so the result stays inside the glued node set.
            Cospan cospan{f1.witnesses.at(a0), f2.witnesses.at(a0)};
            NameJoin portNames;
            for (const PortName& n : aut1.ports)
                portNames.leftRep[n] = po.nodeNames.leftRep.at(n);
            for (const PortName& n : c2.primitives.at(id2).ports)
                portNames.rightRep[n] = po.nodeNames.rightRep.at(n);
            for (const auto& [_, r] : portNames.leftRep) portNames.names.insert(r);
            for (const auto& [_, r] : portNames.rightRep) portNames.names.insert(r);
            PullbackResult pb = pullback(cospan, portNames);

            po.connector.primitives[rep] = pb.apex;
            po.origins[rep] = PrimOrigin{id1, id2};
            po.legLeft.primMap[id1] = rep;
            po.legLeft.witnesses[id1] = pb.projLeft;
            po.legRight.primMap[id2] = rep;
            po.legRight.witnesses[id2] = pb.projRight;
        } else {
            // Unshared primitive: carried over unchanged up to node renaming.
            std::map<PortName, PortName> renaming;
            for (const PortName& n : aut1.ports) renaming[n] = po.nodeNames.leftRep.at(n);
            PortAutomaton renamed = rename_ports(aut1, renaming);
            po.connector.primitives[rep] = renamed;
            po.origins[rep] = PrimOrigin{id1, std::nullopt};
            po.legLeft.primMap[id1] = rep;
            PortAutMorphism w{renamed, aut1, {}, renaming};
            for (const StateId& q : aut1.states) w.stateMap[q] = q;
            po.legLeft.witnesses[id1] = w;
        }
    }
    std::set<std::string> sharedRight;
    for (const auto& [a0, _] : c0.primitives) sharedRight.insert(f2.primMap.at(a0));
    for (const auto& [id2, aut2] : c2.primitives) {
        if (sharedRight.count(id2)) continue;
        std::string rep = po.primNames.rightRep.at(id2);
        std::map<PortName, PortName> renaming;
        for (const PortName& n : aut2.ports) renaming[n] = po.nodeNames.rightRep.at(n);
        PortAutomaton renamed = rename_ports(aut2, renaming);
        po.connector.primitives[rep] = renamed;
        po.origins[rep] = PrimOrigin{std::nullopt, id2};
        po.legRight.primMap[id2] = rep;
        PortAutMorphism w{renamed, aut2, {}, renaming};
        for (const StateId& q : aut2.states) w.stateMap[q] = q;
        po.legRight.witnesses[id2] = w;
    }

    po.legLeft.target = po.connector;
    po.legRight.target = po.connector;
    return po;
}

}  // namespace copa
