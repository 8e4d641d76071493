#include "copa/generate.hpp"

#include <algorithm>

#include "copa/errors.hpp"

namespace copa {

PortAutomaton random_automaton_over(Rng& rng, const std::set<PortName>& pool,
                                    std::size_t maxStates) {
    PortAutomaton a;
    a.ports = pool;
    std::size_t n = 1 + rng.below(maxStates);
    std::vector<StateId> states;
    for (std::size_t i = 0; i < n; ++i) {
        states.push_back("q" + std::to_string(i));
        a.states.insert(states.back());
    }
    a.initial = states.front();
    for (const StateId& from : states)
        for (const StateId& to : states) {
            if (!rng.chance(50)) continue;
            Label lbl;
            for (const PortName& p : pool)
                if (rng.chance(40)) lbl.insert(p);
            a.transitions.insert(Transition{from, lbl, to});
        }
    return a;
}

PortAutomaton random_automaton(Rng& rng, std::size_t maxStates, std::size_t maxPorts) {
    std::set<PortName> pool;
    std::size_t k = rng.below(maxPorts + 1);
    for (std::size_t i = 0; i < k; ++i) pool.insert("P" + std::to_string(i));
    return random_automaton_over(rng, pool, maxStates);
}

PortAutMorphism random_morphism_into(Rng& rng, const PortAutomaton& a0,
                                     const std::string& prefix, std::size_t maxStates,
                                     std::size_t maxExtraPorts, bool identityPorts) {
    PortAutMorphism f;
    f.target = a0;

    std::vector<StateId> targets(a0.states.begin(), a0.states.end());
    std::size_t n = 1 + rng.below(maxStates);
    std::vector<StateId> states;
    for (std::size_t i = 0; i < n; ++i) {
        StateId s = prefix + "s" + std::to_string(i);
        states.push_back(s);
        f.source.states.insert(s);
        f.stateMap[s] = i == 0 ? a0.initial : targets[rng.below(targets.size())];
    }
    f.source.initial = states.front();

    // Backward port map: mostly fresh (injective), sometimes reusing an
    // earlier image. Extra source ports stay outside the image.
    std::vector<PortName> images;
    std::size_t fresh = 0;
    for (const PortName& n0 : a0.ports) {
        PortName img;
        if (identityPorts) img = n0;
        else if (!images.empty() && rng.chance(25)) img = images[rng.below(images.size())];
        else img = prefix + "n" + std::to_string(fresh++);
        f.portMap[n0] = img;
        images.push_back(img);
        f.source.ports.insert(img);
    }
    std::set<PortName> extras;
    std::size_t extraCount = rng.below(maxExtraPorts + 1);
    for (std::size_t i = 0; i < extraCount; ++i) {
        PortName e = prefix + "x" + std::to_string(i);
        extras.insert(e);
        f.source.ports.insert(e);
    }

    // Each source transition refines a chosen target transition between the
    // mapped states; its label is that transition's image plus extra ports.
    for (const StateId& from : states)
        for (const StateId& to : states) {
            std::vector<const Transition*> candidates;
            for (const Transition& t : a0.transitions)
                if (t.from == f.stateMap.at(from) && t.to == f.stateMap.at(to))
                    candidates.push_back(&t);
            if (candidates.empty() || !rng.chance(60)) continue;
            const Transition& base = *candidates[rng.below(candidates.size())];
            Label lbl = f.port_image(base.label);
            for (const PortName& e : extras)
                if (rng.chance(30)) lbl.insert(e);
            f.source.transitions.insert(Transition{from, lbl, to});
        }
    return f;
}

Cospan random_cospan(Rng& rng, std::size_t maxStates, std::size_t maxPorts,
                     std::size_t maxExtraPorts) {
    PortAutomaton a0 = random_automaton(rng, maxStates, maxPorts);
    PortAutMorphism left = random_morphism_into(rng, a0, "l", maxStates, maxExtraPorts);
    PortAutMorphism right = random_morphism_into(rng, a0, "r", maxStates, maxExtraPorts);
    return Cospan{left, right};
}

CubeFixture random_cube(Rng& rng) {
    PortAutomaton b0 = random_automaton(rng, 2, 2);
    PortAutMorphism k1 = random_morphism_into(rng, b0, "m", 2);
    PortAutMorphism k2 = random_morphism_into(rng, b0, "n", 2);
    PortAutMorphism h0 = random_morphism_into(rng, b0, "a", 2);

    PullbackResult left = pullback(Cospan{k1, h0});
    PullbackResult right = pullback(Cospan{k2, h0});

    CubeFixture cube;
    cube.top = Cospan{k1, k2};
    cube.bottom = Cospan{left.projRight, right.projRight};  // A1 -> A0 <- A2
    cube.h0 = h0;
    cube.h1 = left.projLeft;   // A1 -> B1
    cube.h2 = right.projLeft;  // A2 -> B2
    return cube;
}

Connector random_connector(Rng& rng, std::size_t maxPrims, std::size_t maxStates,
                           std::size_t poolSize) {
    std::vector<PortName> pool;
    for (std::size_t i = 0; i < poolSize; ++i) pool.push_back("N" + std::to_string(i));

    Connector c;
    std::size_t k = rng.below(maxPrims + 1);
    for (std::size_t i = 0; i < k; ++i) {
        std::set<PortName> ports;
        for (const PortName& n : pool)
            if (rng.chance(50)) ports.insert(n);
        c.primitives["a" + std::to_string(i)] = random_automaton_over(rng, ports, maxStates);
        c.nodes.insert(ports.begin(), ports.end());
    }
    return c;
}

ConnectorMorphism random_extension(Rng& rng, const Connector& base, const std::string& prefix) {
    ConnectorMorphism f;
    f.source = base;
    f.target.nodes = base.nodes;
    for (const PortName& n : base.nodes) f.nodeMap[n] = n;

    for (const auto& [id, aut] : base.primitives) {
        std::string newId = prefix + "_" + id;
        PortAutMorphism w =
            random_morphism_into(rng, aut, prefix + id, 3, 1, /*identityPorts=*/true);
        f.target.primitives[newId] = w.source;
        f.target.nodes.insert(w.source.ports.begin(), w.source.ports.end());
        f.primMap[id] = newId;
        f.witnesses[id] = w;
    }
    // Occasionally add an unrelated primitive over existing plus fresh nodes.
    if (rng.chance(50)) {
        std::set<PortName> ports;
        std::vector<PortName> existing(f.target.nodes.begin(), f.target.nodes.end());
        if (!existing.empty() && rng.chance(70)) ports.insert(existing[rng.below(existing.size())]);
        if (rng.chance(50)) ports.insert(prefix + "_f0");
        f.target.primitives[prefix + "_extra"] = random_automaton_over(rng, ports, 2);
        f.target.nodes.insert(ports.begin(), ports.end());
    }
    return f;
}

ConnectorSpan random_span(Rng& rng) {
    Connector base = random_connector(rng);
    ConnectorMorphism left = random_extension(rng, base, "l");
    ConnectorMorphism right = random_extension(rng, base, "r");
    return ConnectorSpan{left, right};
}

PetriNet random_net(Rng& rng, std::size_t maxPlaces, std::size_t maxTransitions,
                    unsigned maxCapacity) {
    PetriNet n;
    std::size_t t = 1 + rng.below(maxTransitions);
    std::vector<std::string> trans;
    for (std::size_t i = 0; i < t; ++i) {
        trans.push_back("t" + std::to_string(i));
        n.transitions.insert(trans.back());
    }
    std::size_t k = 1 + rng.below(maxPlaces);
    for (std::size_t i = 0; i < k; ++i) {
        Place p;
        for (const std::string& tr : trans) {
            if (rng.chance(35)) p.in[tr] = 1 + static_cast<unsigned>(rng.below(2));
            if (rng.chance(35)) p.out[tr] = 1 + static_cast<unsigned>(rng.below(2));
        }
        p.capacity = 1 + static_cast<unsigned>(rng.below(maxCapacity));
        p.tokens = static_cast<unsigned>(rng.below(p.capacity + 1));
        n.places["p" + std::to_string(i)] = std::move(p);
    }
    return n;
}

}  // namespace copa
