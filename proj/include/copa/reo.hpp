#pragma once

#include <string>
#include <vector>

#include "copa/connector.hpp"

namespace copa {

// Channel and node primitives. Every primitive carries an explicit tau
// self-loop on each state so composites can interleave.
enum class PrimitiveKind { Sync, EmptyFIFO, FullFIFO, Router, Merger };

std::string to_string(PrimitiveKind kind);
PrimitiveKind primitive_kind_from_string(const std::string& name);
bool is_primitive_kind(const std::string& name);

// Sync(A,B): one state, steps {A,B} and tau. EmptyFIFO(A,B): two states,
// fills on A, drains on B, initially empty. FullFIFO(A,B): same buffer,
// initially full (equals EmptyFIFO(B,A) as a structure). Router(A,B,C):
// one state, {A,B}, {A,C}, tau. Merger(B,C,A) equals Router(A,B,C).
// Throws InvalidArgument on wrong arity or duplicate ports.
PortAutomaton make_primitive(PrimitiveKind kind, const std::vector<PortName>& ports);

// Pinned example objects used by the acceptance suite, the CLI builtins and
// the documentation. "ring" is a token ring: a router fans a token out to
// the A-B or C-D buffered path and a merger feeds it back through a full
// buffer between the hidden nodes, giving the (AB + CD)* protocol.
struct ExampleSet {
    Connector ring;                  // 5 primitives over {A,B,C,D,_h1,_h2}
    PortAutomaton ringBehavior;      // 3-state (AB + CD)* loop over {A,B,C,D}
    PortAutomaton ringBehaviorFull;  // same protocol with hidden firings and tau loops
    PortAutMorphism sampleSimulation;  // 3-state loop simulated by a 2-state loop
    Cospan ringCospan;               // two 4-state halves over a 2-phase interface
    ConnectorSpan insertSpan;        // buffer insertion: left = rule, right = match
};

ExampleSet build_examples();

}  // namespace copa
