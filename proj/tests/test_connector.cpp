#include <doctest.h>

#include "copa/connector.hpp"
#include "copa/errors.hpp"
#include "copa/generate.hpp"
#include "copa/reo.hpp"

using namespace copa;

TEST_CASE("connector validation ties primitive ports to declared nodes") {
    ExampleSet ex = build_examples();
    CHECK(validate_connector(ex.ring).empty());

    Connector broken = ex.ring;
    broken.nodes.erase("_h1");
    auto report = validate_connector(broken);
    REQUIRE_FALSE(report.empty());
    CHECK(report.front().find("_h1") != std::string::npos);
}

TEST_CASE("connector morphisms require agreeing witnesses") {
    Rng rng(13);
    Connector base = random_connector(rng, 2, 2);
    ConnectorMorphism f = random_extension(rng, base, "e");
    CHECK(is_valid_connector_morphism(f));

    ConnectorMorphism idc = identity_connector_morphism(base);
    CHECK(is_valid_connector_morphism(idc));
    CHECK(compose_connector_morphisms(idc, f) == f);

    if (!f.witnesses.empty()) {
        ConnectorMorphism broken = f;
        auto& w = broken.witnesses.begin()->second;
        if (!w.portMap.empty()) {
            w.portMap.begin()->second = "bogus";
            CHECK_FALSE(is_valid_connector_morphism(broken));
        }
    }
}

TEST_CASE("witness synthesis finds the inclusion morphism") {
    ExampleSet ex = build_examples();
    const ConnectorSpan& span = ex.insertSpan;
    ConnectorMorphism built = make_connector_morphism(
        span.left.source, span.left.target, span.left.primMap, span.left.nodeMap);
    CHECK(is_valid_connector_morphism(built));
    CHECK(built.primMap == span.left.primMap);

    // No witness exists when the node images miss the mapped primitive.
    Connector iface;
    iface.nodes = {"A"};
    iface.primitives["p"] = make_primitive(PrimitiveKind::Sync, {"A", "A2"});
    iface.nodes.insert("A2");
    Connector target;
    target.nodes = {"X"};
    CHECK_THROWS_AS(make_connector_morphism(iface, target, {{"p", "q"}}, {{"A", "X"}}), Error);
}

TEST_CASE("the pinned span's pushout rebuilds the ring exactly") {
    ExampleSet ex = build_examples();
    PushoutResult po = pushout(ex.insertSpan);
    CHECK(po.connector == ex.ring);
    CHECK(po.connector.primitives.size() == 5);
    CHECK(po.connector.nodes.size() == 6);
    CHECK(is_valid_connector_morphism(po.legLeft));
    CHECK(is_valid_connector_morphism(po.legRight));
    CHECK(po.legLeft.target == po.connector);
    CHECK(po.legRight.target == po.connector);
}

TEST_CASE("pushouts glue shared primitives by pulling back their witnesses") {
    Rng rng(17);
    for (int i = 0; i < 10; ++i) {
        ConnectorSpan s = random_span(rng);
        PushoutResult po = pushout(s);
        CHECK(validate_connector(po.connector).empty());
        CHECK(is_valid_connector_morphism(po.legLeft));
        CHECK(is_valid_connector_morphism(po.legRight));
        // The square commutes.
        CHECK(compose_connector_morphisms(s.left, po.legLeft) ==
              compose_connector_morphisms(s.right, po.legRight));
        // Every interface primitive appears glued exactly once.
        for (const auto& [id, _] : s.left.source.primitives) {
            const std::string& rep = po.legLeft.primMap.at(s.left.primMap.at(id));
            CHECK(po.origins.at(rep).left.has_value());
            CHECK(po.origins.at(rep).right.has_value());
        }
    }
}

TEST_CASE("pushout requires monic legs on primitives") {
    ExampleSet ex = build_examples();
    Connector twoPrims;
    twoPrims.nodes = {"A", "B"};
    twoPrims.primitives["p"] = make_primitive(PrimitiveKind::Sync, {"A", "B"});
    twoPrims.primitives["q"] = make_primitive(PrimitiveKind::Sync, {"A", "B"});
    ConnectorMorphism collapse =
        make_connector_morphism(twoPrims, twoPrims, {{"p", "p"}, {"q", "p"}},
                                {{"A", "A"}, {"B", "B"}});
    CHECK_THROWS_AS(pushout(ConnectorSpan{collapse, identity_connector_morphism(twoPrims)}),
                    Error);
}
