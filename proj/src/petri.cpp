#include "copa/petri.hpp"

#include <algorithm>
#include <deque>

#include "copa/errors.hpp"
#include "copa/semantics.hpp"

namespace copa {

std::vector<std::string> validate_net(const PetriNet& net) {
    std::vector<std::string> report;
    for (const auto& [id, p] : net.places) {
        if (id.empty()) report.push_back("empty place id");
        if (p.capacity == 0) report.push_back("place '" + id + "': capacity must be positive");
        if (p.tokens > p.capacity)
            report.push_back("place '" + id + "': initial tokens exceed capacity");
        for (const auto* arcs : {&p.in, &p.out})
            for (const auto& [t, w] : *arcs) {
                if (!net.transitions.count(t))
                    report.push_back("place '" + id + "': undeclared transition '" + t + "'");
                if (w == 0)
                    report.push_back("place '" + id + "': zero-weight arc to '" + t + "'");
            }
    }
    return report;
}

namespace {

std::vector<std::string> adjacent(const Place& p) {
    std::set<std::string> adj;
    for (const auto& [t, _] : p.in) adj.insert(t);
    for (const auto& [t, _] : p.out) adj.insert(t);
    return {adj.begin(), adj.end()};
}

unsigned weight(const std::map<std::string, unsigned>& arcs, const std::string& t) {
    auto it = arcs.find(t);
    return it == arcs.end() ? 0u : it->second;
}

// Fires T at one place; returns the new count or nullopt when disabled.
std::optional<unsigned> fire(const Place& p, unsigned m, const Label& T) {
    unsigned consumed = 0, produced = 0;
    for (const std::string& t : T) {
        consumed += weight(p.out, t);
        produced += weight(p.in, t);
    }
    if (m < consumed) return std::nullopt;
    unsigned next = m - consumed + produced;
    if (next > p.capacity) return std::nullopt;
    return next;
}

}  // namespace

PortAutomaton encode_place(const PetriNet& net, const std::string& placeId) {
    auto it = net.places.find(placeId);
    if (it == net.places.end())
        throw Error(ErrorKind::InvalidArgument, "undeclared place '" + placeId + "'");
    const Place& p = it->second;

    PortAutomaton a;
    for (unsigned m = 0; m <= p.capacity; ++m) a.states.insert(std::to_string(m));
    a.initial = std::to_string(p.tokens);

    std::vector<std::string> adj = adjacent(p);
    a.ports.insert(adj.begin(), adj.end());

    for (std::size_t mask = 0; mask < (std::size_t{1} << adj.size()); ++mask) {
        Label T;
        for (std::size_t i = 0; i < adj.size(); ++i)
            if (mask & (std::size_t{1} << i)) T.insert(adj[i]);
        for (unsigned m = 0; m <= p.capacity; ++m)
            if (auto next = fire(p, m, T))
                a.transitions.insert(Transition{std::to_string(m), T, std::to_string(*next)});
    }
    return a;
}

Connector encode_net(const PetriNet& net) {
    auto report = validate_net(net);
    if (!report.empty())
        throw Error(ErrorKind::Validation, "encode_net: invalid net: " + report.front());
    Connector c;
    c.nodes = net.transitions;
    for (const auto& [id, _] : net.places) c.primitives[id] = encode_place(net, id);
    return c;
}

PortAutomaton marking_graph(const PetriNet& net, std::size_t maxMarkings) {
    auto report = validate_net(net);
    if (!report.empty())
        throw Error(ErrorKind::Validation, "marking_graph: invalid net: " + report.front());

    std::vector<std::string> placeIds;
    for (const auto& [id, _] : net.places) placeIds.push_back(id);

    // Only place-adjacent transitions can ever fire; a transition touching
    // no place has no enabling step in the encoded connector either.
    std::set<std::string> adjSet;
    for (const auto& [_, p] : net.places)
        for (const std::string& t : adjacent(p)) adjSet.insert(t);
    std::vector<std::string> adj(adjSet.begin(), adjSet.end());
    if (adj.size() > 24)
        throw Error(ErrorKind::SizeGuard,
                    "marking_graph: too many transitions for step-set enumeration");

    std::vector<Label> steps;
    for (std::size_t mask = 0; mask < (std::size_t{1} << adj.size()); ++mask) {
        Label U;
        for (std::size_t i = 0; i < adj.size(); ++i)
            if (mask & (std::size_t{1} << i)) U.insert(adj[i]);
        steps.push_back(std::move(U));
    }

    using Marking = std::vector<unsigned>;
    auto name = [&](const Marking& m) {
        std::vector<StateId> counts;
        for (unsigned v : m) counts.push_back(std::to_string(v));
        return tuple_state(counts);
    };

    PortAutomaton g;
    g.ports = net.transitions;

    Marking init;
    for (const std::string& id : placeIds) init.push_back(net.places.at(id).tokens);
    g.initial = name(init);

    std::map<Marking, StateId> seen{{init, g.initial}};
    std::deque<Marking> work{init};
    g.states.insert(g.initial);

    while (!work.empty()) {
        Marking m = work.front();
        work.pop_front();
        for (const Label& U : steps) {
            Marking next(m.size());
            bool enabled = true;
            for (std::size_t i = 0; i < placeIds.size() && enabled; ++i) {
                const Place& p = net.places.at(placeIds[i]);
                Label local;
                for (const std::string& t : adjacent(p))
                    if (U.count(t)) local.insert(t);
                auto v = fire(p, m[i], local);
                if (!v) enabled = false;
                else next[i] = *v;
            }
            if (!enabled) continue;
            auto [it, fresh] = seen.emplace(next, name(next));
            if (fresh) {
                if (seen.size() > maxMarkings)
                    throw Error(ErrorKind::SizeGuard, "marking_graph: more than " +
                                                          std::to_string(maxMarkings) +
                                                          " reachable markings");
                g.states.insert(it->second);
                work.push_back(next);
            }
            g.transitions.insert(Transition{seen.at(m), U, it->second});
        }
    }
    return g;
}

PetriNet example_net() {
    PetriNet n;
    n.transitions = {"A", "B", "C", "D"};
    n.places["c1"] = Place{{{"B", 1}, {"D", 1}}, {{"A", 1}, {"C", 1}}, 1, 1};
    n.places["w1"] = Place{{{"A", 1}}, {{"B", 1}}, 0, 1};
    n.places["s"] = Place{{{"C", 1}}, {{"D", 1}}, 0, 1};
    return n;
}

}  // namespace copa
