#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "copa/semantics.hpp"

namespace copa {

struct SuiteResult {
    bool pass = true;
    std::size_t ran = 0;     // iterations completed (including the failing one)
    std::string detail;      // first failure description, empty on pass
    // Serialized JSON documents of the objects behind the first failure,
    // ready to be written out as counterexample files.
    std::vector<std::pair<std::string, std::string>> artifacts;
};

// Seeded randomized law suites:
//   pullback - projections validate, apex steps match an independent
//              re-derivation, mediating morphisms exist uniquely (every 5th
//              iteration, uniqueness by exhaustive enumeration)
//   cube     - the induced apex morphism of a commuting cube validates and
//              commutes with the projections
//   functor  - semantics of connector morphisms: identity to identity,
//              composition reversed, image morphisms valid
//   span     - semantics of a random span's pushout equals the pullback of
//              its semantics
//   petri    - reachable connector semantics of an encoded net equals the
//              marking graph oracle
//   all      - every suite above at the given count
SuiteResult run_suite(const std::string& suite, std::size_t count, std::uint64_t seed);

std::vector<std::string> suite_names();

}  // namespace copa
