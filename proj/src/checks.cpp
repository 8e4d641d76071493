#include "copa/checks.hpp"

#include <algorithm>

#include "copa/errors.hpp"
#include "copa/generate.hpp"
#include "copa/json_io.hpp"
#include "copa/petri.hpp"

namespace copa {

namespace {

Label intersect(const Label& a, const Label& b) {
    Label out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.begin()));
    return out;
}

void dump_cospan(SuiteResult& r, const Cospan& c) {
    r.artifacts.emplace_back("cospan_left.json", morphism_to_json(c.left).dump(2));
    r.artifacts.emplace_back("cospan_right.json", morphism_to_json(c.right).dump(2));
}

bool maps_equal(const PortAutMorphism& a, const PortAutMorphism& b) {
    return a.stateMap == b.stateMap && a.portMap == b.portMap;
}

SuiteResult suite_pullback(std::size_t count, std::uint64_t seed) {
    SuiteResult r;
    Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        r.ran = i + 1;
        Cospan c = random_cospan(rng, 3, 2, 1);
        PullbackResult pb = pullback(c);

        if (!is_valid_morphism(pb.projLeft) || !is_valid_morphism(pb.projRight)) {
            r.pass = false;
            r.detail = "iteration " + std::to_string(i) + ": a projection is not a morphism";
            dump_cospan(r, c);
            return r;
        }

        // Independent re-derivation of the apex steps from the definition.
        auto inj = [](const std::map<PortName, PortName>& rep, const Label& s) {
            Label out;
            for (const PortName& n : s) out.insert(rep.at(n));
            return out;
        };
        Label n1 = inj(pb.names.leftRep, c.left.source.ports);
        Label n2 = inj(pb.names.rightRep, c.right.source.ports);
        std::set<Transition> expected;
        for (const Transition& t1 : c.left.source.transitions)
            for (const Transition& t2 : c.right.source.transitions) {
                if (c.left.stateMap.at(t1.from) != c.right.stateMap.at(t2.from)) continue;
                if (c.left.stateMap.at(t1.to) != c.right.stateMap.at(t2.to)) continue;
                Label s1 = inj(pb.names.leftRep, t1.label);
                Label s2 = inj(pb.names.rightRep, t2.label);
                if (intersect(s1, n2) != intersect(s2, n1)) continue;
                Label lbl = s1;
                lbl.insert(s2.begin(), s2.end());
                expected.insert(Transition{pair_state(t1.from, t2.from), lbl,
                                           pair_state(t1.to, t2.to)});
            }
        if (expected != pb.apex.transitions) {
            r.pass = false;
            r.detail = "iteration " + std::to_string(i) + ": apex steps disagree with the rule";
            dump_cospan(r, c);
            r.artifacts.emplace_back("apex.json", automaton_to_json(pb.apex).dump(2));
            return r;
        }

        if (i % 5 == 0) {
            // A commuting square through the apex must factor uniquely.
            PortAutMorphism h = random_morphism_into(rng, pb.apex, "x", 2, 0);
            PortAutMorphism h1 = compose_morphisms(h, pb.projLeft);
            PortAutMorphism h2 = compose_morphisms(h, pb.projRight);
            PortAutMorphism med = mediating_morphism(pb, h1, h2);
            std::size_t factoring = 0;
            for (const PortAutMorphism& m : enumerate_morphisms(h.source, pb.apex))
                if (maps_equal(compose_morphisms(m, pb.projLeft), h1) &&
                    maps_equal(compose_morphisms(m, pb.projRight), h2))
                    ++factoring;
            if (!maps_equal(med, h) || factoring != 1) {
                r.pass = false;
                r.detail = "iteration " + std::to_string(i) +
                           ": mediating morphism missing, wrong, or not unique (found " +
                           std::to_string(factoring) + ")";
                dump_cospan(r, c);
                r.artifacts.emplace_back("square.json", morphism_to_json(h).dump(2));
                return r;
            }
        }
    }
    return r;
}

SuiteResult suite_cube(std::size_t count, std::uint64_t seed) {
    SuiteResult r;
    Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        r.ran = i + 1;
        CubeFixture cube = random_cube(rng);
        PullbackResult pbA = pullback(cube.bottom);
        PullbackResult pbB = pullback(cube.top);
        PortAutMorphism ind = induced_pullback_morphism(pbA, pbB, cube.h0, cube.h1, cube.h2);
        bool commutes =
            maps_equal(compose_morphisms(ind, pbB.projLeft),
                       compose_morphisms(pbA.projLeft, cube.h1)) &&
            maps_equal(compose_morphisms(ind, pbB.projRight),
                       compose_morphisms(pbA.projRight, cube.h2));
        if (!is_valid_morphism(ind) || !commutes) {
            r.pass = false;
            r.detail = "iteration " + std::to_string(i) +
                       ": induced apex morphism invalid or non-commuting";
            r.artifacts.emplace_back("h0.json", morphism_to_json(cube.h0).dump(2));
            r.artifacts.emplace_back("h1.json", morphism_to_json(cube.h1).dump(2));
            r.artifacts.emplace_back("h2.json", morphism_to_json(cube.h2).dump(2));
            return r;
        }
    }
    return r;
}

SuiteResult suite_functor(std::size_t count, std::uint64_t seed) {
    SuiteResult r;
    Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        r.ran = i + 1;
        Connector base = random_connector(rng);
        ConnectorMorphism f = random_extension(rng, base, "p");
        ConnectorMorphism g = random_extension(rng, f.target, "q");

        auto fail = [&](const std::string& what) {
            r.pass = false;
            r.detail = "iteration " + std::to_string(i) + ": " + what;
            r.artifacts.emplace_back("f.json", connector_morphism_to_json(f).dump(2));
            r.artifacts.emplace_back("g.json", connector_morphism_to_json(g).dump(2));
        };

        PortAutMorphism semId = sem_morphism(identity_connector_morphism(base));
        if (semId != identity_morphism(sem_connector(base, false).automaton)) {
            fail("identity is not sent to the identity");
            return r;
        }
        PortAutMorphism semF = sem_morphism(f);
        PortAutMorphism semG = sem_morphism(g);
        if (!is_valid_morphism(semF) || !is_valid_morphism(semG)) {
            fail("image of a connector morphism is not a valid simulation");
            return r;
        }
        PortAutMorphism semGF = sem_morphism(compose_connector_morphisms(f, g));
        if (semGF != compose_morphisms(semG, semF)) {
            fail("composition law violated");
            return r;
        }
    }
    return r;
}

SuiteResult suite_span(std::size_t count, std::uint64_t seed) {
    SuiteResult r;
    Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        r.ran = i + 1;
        ConnectorSpan s = random_span(rng);
        CompositionalityReport rep = check_compositionality(s);
        if (!rep.pass) {
            r.pass = false;
            r.detail = "iteration " + std::to_string(i) + ": " + rep.detail;
            r.artifacts.emplace_back("span_left.json",
                                     connector_morphism_to_json(s.left).dump(2));
            r.artifacts.emplace_back("span_right.json",
                                     connector_morphism_to_json(s.right).dump(2));
            r.artifacts.emplace_back("lhs.json", automaton_to_json(rep.lhs).dump(2));
            r.artifacts.emplace_back("rhs.json", automaton_to_json(rep.rhs).dump(2));
            return r;
        }
    }
    return r;
}

SuiteResult suite_petri(std::size_t count, std::uint64_t seed) {
    SuiteResult r;
    Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        r.ran = i + 1;
        PetriNet n = random_net(rng);
        PortAutomaton oracle = marking_graph(n);
        PortAutomaton viaSem = sem_connector(encode_net(n), true).automaton;
        if (oracle != viaSem) {
            r.pass = false;
            r.detail = "iteration " + std::to_string(i) +
                       ": marking graph disagrees with connector semantics";
            r.artifacts.emplace_back("net.json", net_to_json(n).dump(2));
            r.artifacts.emplace_back("marking_graph.json", automaton_to_json(oracle).dump(2));
            r.artifacts.emplace_back("semantics.json", automaton_to_json(viaSem).dump(2));
            return r;
        }
    }
    return r;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"pullback", "cube", "functor", "span", "petri"};
}

SuiteResult run_suite(const std::string& suite, std::size_t count, std::uint64_t seed) {
    if (suite == "pullback") return suite_pullback(count, seed);
    if (suite == "cube") return suite_cube(count, seed);
    if (suite == "functor") return suite_functor(count, seed);
    if (suite == "span") return suite_span(count, seed);
    if (suite == "petri") return suite_petri(count, seed);
    if (suite == "all") {
        SuiteResult total;
        for (const std::string& name : suite_names()) {
            SuiteResult r = run_suite(name, count, seed);
            total.ran += r.ran;
            if (!r.pass) {
                total.pass = false;
                total.detail = name + ": " + r.detail;
                total.artifacts = std::move(r.artifacts);
                return total;
            }
        }
        return total;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown suite '" + suite + "'");
}

}  // namespace copa
