#pragma once

#include <cstdint>
#include <random>

#include "copa/connector.hpp"
#include "copa/petri.hpp"

namespace copa {

// Deterministic seeded source for the randomized suites: same seed, same
// objects, on every platform.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::size_t below(std::size_t n) { return n == 0 ? 0 : eng() % n; }
    bool chance(unsigned percent) { return eng() % 100 < percent; }
};

// Random automaton over the given ports (or over an internal "P<i>" pool).
PortAutomaton random_automaton(Rng& rng, std::size_t maxStates = 3, std::size_t maxPorts = 3);
PortAutomaton random_automaton_over(Rng& rng, const std::set<PortName>& pool,
                                    std::size_t maxStates);

// A morphism into a0 that is valid by construction: source states refine
// a0's states and every source transition is built from a chosen a0
// transition, optionally extended by ports outside the port map's image.
// All fresh names carry the prefix. identityPorts pins portMap[n] = n.
PortAutMorphism random_morphism_into(Rng& rng, const PortAutomaton& a0,
                                     const std::string& prefix, std::size_t maxStates = 3,
                                     std::size_t maxExtraPorts = 1, bool identityPorts = false);

Cospan random_cospan(Rng& rng, std::size_t maxStates = 3, std::size_t maxPorts = 3,
                     std::size_t maxExtraPorts = 1);

// A commuting cube over two cospans, built so that the left cospan's legs
// are pullback projections against h0; the induced apex morphism must then
// exist and validate.
struct CubeFixture {
    Cospan bottom;  // f1: A1 -> A0 <- A2
    Cospan top;     // k1: B1 -> B0 <- B2
    PortAutMorphism h0, h1, h2;
};

CubeFixture random_cube(Rng& rng);

// Node-covered random connector: every node is a port of some primitive.
Connector random_connector(Rng& rng, std::size_t maxPrims = 2, std::size_t maxStates = 2,
                           std::size_t poolSize = 3);

// A valid connector morphism base -> extension with injective primitive and
// node maps: each base primitive is refined (witnessed by construction) and
// fresh primitives/nodes may be added. Fresh names carry the prefix.
ConnectorMorphism random_extension(Rng& rng, const Connector& base, const std::string& prefix);

ConnectorSpan random_span(Rng& rng);

PetriNet random_net(Rng& rng, std::size_t maxPlaces = 4, std::size_t maxTransitions = 5,
                    unsigned maxCapacity = 2);

}  // namespace copa
