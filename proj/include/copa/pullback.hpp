#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "copa/morphism.hpp"

namespace copa {

// Canonical pushout of two name sets in Set: disjoint union quotiented by
// the given identifications. Representatives: a bare name when a class
// identifies textually equal left/right names (or is an unambiguous
// singleton), otherwise the lexicographically least "L:x"/"R:x" qualified
// member. Names that would clash across sides stay qualified.
struct NameJoin {
    std::map<std::string, std::string> leftRep;   // left name  -> representative
    std::map<std::string, std::string> rightRep;  // right name -> representative
    std::set<std::string> names;                  // all representatives
};

NameJoin join_names(const std::set<std::string>& left, const std::set<std::string>& right,
                    const std::vector<std::pair<std::string, std::string>>& identify);

// Two morphisms into a shared interface automaton: f1: A1 -> A0 <- A2 :f2.
struct Cospan {
    PortAutMorphism left;
    PortAutMorphism right;
};

struct PullbackResult {
    Cospan cospan;
    PortAutomaton apex;          // A3
    PortAutMorphism projLeft;    // g1: A3 -> A1
    PortAutMorphism projRight;   // g2: A3 -> A2
    NameJoin names;              // N3 = N1 +_{N0} N2
    std::map<StateId, std::pair<StateId, StateId>> statePairs;
};

// Componentwise pullback: apex states are pairs agreeing under the cospan,
// apex ports the pushout of the name sets, transitions all pairs satisfying
// g1(S1) /\ g2(N2) = g2(S2) /\ g1(N1), labeled g1(S1) u g2(S2). No
// reachability pruning. Only the cospan's shape is required, not simulation
// validity of its legs; the projections validate by construction regardless.
PullbackResult pullback(const Cospan& c);

// Pullback with caller-chosen port representatives (must refine to exactly
// the same classes as the cospan-induced identifications; throws Mismatch if
// the given naming merges classes the cospan keeps apart).
PullbackResult pullback(const Cospan& c, const NameJoin& names);

// Plain product: pullback over the final automaton. Port sets are qualified
// apart automatically where they clash.
PullbackResult product(const PortAutomaton& a, const PortAutomaton& b);

// The unique h: X -> apex with projLeft . h = h1 and projRight . h = h2,
// given a commuting square f1 . h1 = f2 . h2. Throws Mismatch otherwise.
PortAutMorphism mediating_morphism(const PullbackResult& pb, const PortAutMorphism& h1,
                                   const PortAutMorphism& h2);

// Induced morphism between pullback apexes, built from componentwise
// morphisms h0: A0->B0, h1: A1->B1, h2: A2->B2 making the cube commute.
PortAutMorphism induced_pullback_morphism(const PullbackResult& pbA, const PullbackResult& pbB,
                                          const PortAutMorphism& h0, const PortAutMorphism& h1,
                                          const PortAutMorphism& h2);

// Composite state naming, left component first.
std::string pair_state(const StateId& left, const StateId& right);

}  // namespace copa
