#pragma once

#include <json.hpp>

#include "copa/petri.hpp"
#include "copa/reconfig.hpp"
#include "copa/semantics.hpp"

namespace copa {

// All serializers emit sorted arrays and stable key order so identical
// objects always produce identical bytes. Deserializers throw Parse on
// malformed documents and Validation when the decoded object is invalid.
using Json = nlohmann::ordered_json;

Json automaton_to_json(const PortAutomaton& a);
PortAutomaton automaton_from_json(const Json& j);

// Primitive values may be a full automaton object or a constructor of the
// form {"kind": "EmptyFIFO", "ports": ["A","B"]}; output always expands to
// the full automaton.
Json connector_to_json(const Connector& c);
Connector connector_from_json(const Json& j);

Json morphism_to_json(const PortAutMorphism& f);
PortAutMorphism morphism_from_json(const Json& j);

Json connector_morphism_to_json(const ConnectorMorphism& f);
ConnectorMorphism connector_morphism_from_json(const Json& j);

Json net_to_json(const PetriNet& n);
PetriNet net_from_json(const Json& j);

Json transfer_report_to_json(const TransferReport& r);
Json compositionality_report_to_json(const CompositionalityReport& r);

}  // namespace copa
