#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "copa/automaton.hpp"

namespace copa {

// Simulation of port automata: a forward state map and a backward port-name
// map. For every source transition q -S1-> p there must be a target
// transition f(q) -S2-> f(p) with image(portMap) `intersect` S1 = portMap(S2).
struct PortAutMorphism {
    PortAutomaton source;  // A1
    PortAutomaton target;  // A2
    std::map<StateId, StateId> stateMap;   // total Q1 -> Q2
    std::map<PortName, PortName> portMap;  // total N2 -> N1 (backward)

    bool operator==(const PortAutMorphism&) const = default;

    const StateId& state(const StateId& q) const { return stateMap.at(q); }
    const PortName& port(const PortName& n) const { return portMap.at(n); }

    // Image of a target-side port set under the backward port map.
    Label port_image(const Label& targetPorts) const;
};

// Default cap on simulation/isomorphism search work, in examined candidates.
inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

std::vector<std::string> validate_morphism(const PortAutMorphism& f);
bool is_valid_morphism(const PortAutMorphism& f);

PortAutMorphism identity_morphism(const PortAutomaton& a);

// Componentwise composition: first f, then g. Throws Mismatch if
// f.target != g.source.
PortAutMorphism compose_morphisms(const PortAutMorphism& f, const PortAutMorphism& g);

// The unique morphism into the final automaton.
PortAutMorphism terminal_morphism(const PortAutomaton& a);

// Backtracking search for some validating morphism a0 -> a1, deterministic
// lexicographic order. Returns nullopt if none exists; throws Budget if the
// search examines more than `budget` candidate assignments (distinct from a
// negative answer).
std::optional<PortAutMorphism> find_simulation(const PortAutomaton& a0, const PortAutomaton& a1,
                                               std::uint64_t budget = kDefaultSearchBudget);

// Like find_simulation but with the backward port map pinned by the caller.
std::optional<PortAutMorphism> find_simulation_fixed_ports(
    const PortAutomaton& a0, const PortAutomaton& a1,
    const std::map<PortName, PortName>& portMap, std::uint64_t budget = kDefaultSearchBudget);

// Categorical isomorphism: a pair (f: a->b, g: b->a) with g.f = id and
// f.g = id, or nullopt.
std::optional<std::pair<PortAutMorphism, PortAutMorphism>> check_isomorphic(
    const PortAutomaton& a, const PortAutomaton& b,
    std::uint64_t budget = kDefaultSearchBudget);

// Exhaustive enumeration of all validating morphisms a -> b, in lexicographic
// order. Intended for small automata (uniqueness oracles in tests).
std::vector<PortAutMorphism> enumerate_morphisms(const PortAutomaton& a, const PortAutomaton& b,
                                                 std::uint64_t budget = kDefaultSearchBudget);

}  // namespace copa
