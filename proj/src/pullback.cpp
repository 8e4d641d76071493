#include "copa/pullback.hpp"

#include <algorithm>
#include <numeric>

#include "copa/errors.hpp"

namespace copa {

namespace {

struct UnionFind {
    std::map<std::string, std::string> parent;

    void add(const std::string& x) {
        if (!parent.count(x)) parent[x] = x;
    }
    std::string find(const std::string& x) {
        std::string r = x;
        while (parent.at(r) != r) r = parent.at(r);
        // path compression
        std::string c = x;
        while (parent.at(c) != r) {
            std::string next = parent.at(c);
            parent[c] = r;
            c = next;
        }
        return r;
    }
    void unite(const std::string& a, const std::string& b) {
        std::string ra = find(a), rb = find(b);
        if (ra != rb) parent[std::min(ra, rb)] = std::max(ra, rb);
    }
};

Label intersect(const Label& a, const Label& b) {
    Label out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.begin()));
    return out;
}

std::map<std::string, std::vector<std::string>> name_classes(
    const std::set<std::string>& left, const std::set<std::string>& right,
    const std::vector<std::pair<std::string, std::string>>& identify) {
    UnionFind uf;
    for (const auto& x : left) uf.add("L:" + x);
    for (const auto& x : right) uf.add("R:" + x);
    for (const auto& [l, r] : identify) {
        if (!left.count(l) || !right.count(r))
            throw Error(ErrorKind::InvalidArgument,
                        "identification refers to a name outside the joined sets: (" + l + "," +
                            r + ")");
        uf.unite("L:" + l, "R:" + r);
    }
    std::map<std::string, std::vector<std::string>> classes;
    for (const auto& [member, _] : uf.parent) classes[uf.find(member)].push_back(member);
    for (auto& [_, members] : classes) std::sort(members.begin(), members.end());
    return classes;
}

}  // namespace

NameJoin join_names(const std::set<std::string>& left, const std::set<std::string>& right,
                    const std::vector<std::pair<std::string, std::string>>& identify) {
    auto classes = name_classes(left, right, identify);

    // A class may claim a bare representative when it identifies textually
    // equal names from both sides, or when it is a singleton. Claims are
    // granted only when unique across classes.
    std::map<std::string, std::string> candidate;  // class key -> bare claim
    std::map<std::string, int> claims;
    for (const auto& [key, members] : classes) {
        std::set<std::string> lefts, rights;
        for (const auto& m : members) {
            if (m.rfind("L:", 0) == 0) lefts.insert(m.substr(2));
            else rights.insert(m.substr(2));
        }
        std::vector<std::string> agree;
        std::set_intersection(lefts.begin(), lefts.end(), rights.begin(), rights.end(),
                              std::back_inserter(agree));
        if (!agree.empty())
            candidate[key] = agree.front();
        else if (members.size() == 1)
            candidate[key] = members.front().substr(2);
        if (candidate.count(key)) claims[candidate.at(key)]++;
    }

    NameJoin join;
    for (const auto& [key, members] : classes) {
        std::string rep;
        auto it = candidate.find(key);
        if (it != candidate.end() && claims.at(it->second) == 1)
            rep = it->second;
        else
            rep = members.front();  // least qualified member
        join.names.insert(rep);
        for (const auto& m : members) {
            if (m.rfind("L:", 0) == 0) join.leftRep[m.substr(2)] = rep;
            else join.rightRep[m.substr(2)] = rep;
        }
    }
    return join;
}

std::string pair_state(const StateId& left, const StateId& right) {
    return "(" + left + "," + right + ")";
}

static std::vector<std::pair<std::string, std::string>> cospan_identifications(const Cospan& c) {
    std::vector<std::pair<std::string, std::string>> identify;
    for (const PortName& n0 : c.left.target.ports)
        identify.emplace_back(c.left.portMap.at(n0), c.right.portMap.at(n0));
    return identify;
}

PullbackResult pullback(const Cospan& c, const NameJoin& names) {
    if (c.left.target != c.right.target)
        throw Error(ErrorKind::InvalidArgument, "invalid cospan: shared target automata differ");
    const PortAutomaton& a1 = c.left.source;
    const PortAutomaton& a2 = c.right.source;

    // The supplied naming must not merge port classes the cospan keeps apart.
    {
        auto classes = name_classes(a1.ports, a2.ports, cospan_identifications(c));
        std::map<std::string, std::string> repOwner;
        for (const auto& [key, members] : classes) {
            const std::string& m = members.front();
            std::string rep = m.rfind("L:", 0) == 0 ? names.leftRep.at(m.substr(2))
                                                    : names.rightRep.at(m.substr(2));
            for (const auto& other : members) {
                std::string r2 = other.rfind("L:", 0) == 0 ? names.leftRep.at(other.substr(2))
                                                           : names.rightRep.at(other.substr(2));
                if (r2 != rep)
                    throw Error(ErrorKind::Mismatch,
                                "port naming splits an identified class at '" + other + "'");
            }
            auto [it, fresh] = repOwner.emplace(rep, key);
            if (!fresh && it->second != key)
                throw Error(ErrorKind::Mismatch,
                            "port naming merges distinct port classes at '" + rep + "'");
        }
    }

    PullbackResult pb;
    pb.cospan = c;
    pb.names = names;
    pb.apex.ports = names.names;

    for (const StateId& q1 : a1.states)
        for (const StateId& q2 : a2.states)
            if (c.left.stateMap.at(q1) == c.right.stateMap.at(q2)) {
                StateId s = pair_state(q1, q2);
                pb.apex.states.insert(s);
                pb.statePairs[s] = {q1, q2};
            }

    pb.apex.initial = pair_state(a1.initial, a2.initial);
    if (!pb.apex.states.count(pb.apex.initial))
        throw Error(ErrorKind::Validation, "cospan legs do not agree on the initial state");

    auto injectLeft = [&](const Label& s) {
        Label out;
        for (const PortName& n : s) out.insert(names.leftRep.at(n));
        return out;
    };
    auto injectRight = [&](const Label& s) {
        Label out;
        for (const PortName& n : s) out.insert(names.rightRep.at(n));
        return out;
    };
    Label g1N1 = injectLeft(Label(a1.ports.begin(), a1.ports.end()));
    Label g2N2 = injectRight(Label(a2.ports.begin(), a2.ports.end()));

    for (const Transition& t1 : a1.transitions)
        for (const Transition& t2 : a2.transitions) {
            StateId from = pair_state(t1.from, t2.from);
            StateId to = pair_state(t1.to, t2.to);
            if (!pb.apex.states.count(from) || !pb.apex.states.count(to)) continue;
            Label s1 = injectLeft(t1.label);
            Label s2 = injectRight(t2.label);
            if (intersect(s1, g2N2) != intersect(s2, g1N1)) continue;
            Label lbl = s1;
            lbl.insert(s2.begin(), s2.end());
            pb.apex.transitions.insert(Transition{from, lbl, to});
        }

    pb.projLeft = PortAutMorphism{pb.apex, a1, {}, {}};
    pb.projRight = PortAutMorphism{pb.apex, a2, {}, {}};
    for (const auto& [s, qs] : pb.statePairs) {
        pb.projLeft.stateMap[s] = qs.first;
        pb.projRight.stateMap[s] = qs.second;
    }
    for (const PortName& n : a1.ports) pb.projLeft.portMap[n] = names.leftRep.at(n);
    for (const PortName& n : a2.ports) pb.projRight.portMap[n] = names.rightRep.at(n);
    return pb;
}

PullbackResult pullback(const Cospan& c) {
    if (c.left.target != c.right.target)
        throw Error(ErrorKind::InvalidArgument, "invalid cospan: shared target automata differ");
    return pullback(c, join_names(c.left.source.ports, c.right.source.ports,
                                  cospan_identifications(c)));
}

PullbackResult product(const PortAutomaton& a, const PortAutomaton& b) {
    return pullback(Cospan{terminal_morphism(a), terminal_morphism(b)});
}

PortAutMorphism mediating_morphism(const PullbackResult& pb, const PortAutMorphism& h1,
                                   const PortAutMorphism& h2) {
    if (h1.source != h2.source)
        throw Error(ErrorKind::Mismatch, "mediating_morphism: h1 and h2 have different sources");
    if (h1.target != pb.cospan.left.source || h2.target != pb.cospan.right.source)
        throw Error(ErrorKind::Mismatch,
                    "mediating_morphism: targets do not match the pullback's cospan");
    PortAutMorphism viaLeft = compose_morphisms(h1, pb.cospan.left);
    PortAutMorphism viaRight = compose_morphisms(h2, pb.cospan.right);
    if (viaLeft.stateMap != viaRight.stateMap || viaLeft.portMap != viaRight.portMap)
        throw Error(ErrorKind::Mismatch, "mediating_morphism: square from X does not commute");

    PortAutMorphism h{h1.source, pb.apex, {}, {}};
    for (const StateId& x : h1.source.states)
        h.stateMap[x] = pair_state(h1.stateMap.at(x), h2.stateMap.at(x));

    // The port map is induced by the name pushout; commutation makes it
    // independent of the chosen class member.
    for (const PortName& rep : pb.apex.ports) {
        std::optional<PortName> value;
        for (const auto& [n1, r] : pb.names.leftRep)
            if (r == rep) {
                PortName v = h1.portMap.at(n1);
                if (value && *value != v)
                    throw Error(ErrorKind::Mismatch,
                                "mediating_morphism: inconsistent induced port map at '" + rep +
                                    "'");
                value = v;
            }
        for (const auto& [n2, r] : pb.names.rightRep)
            if (r == rep) {
                PortName v = h2.portMap.at(n2);
                if (value && *value != v)
                    throw Error(ErrorKind::Mismatch,
                                "mediating_morphism: inconsistent induced port map at '" + rep +
                                    "'");
                value = v;
            }
        h.portMap[rep] = *value;
    }
    return h;
}

PortAutMorphism induced_pullback_morphism(const PullbackResult& pbA, const PullbackResult& pbB,
                                          const PortAutMorphism& h0, const PortAutMorphism& h1,
                                          const PortAutMorphism& h2) {
    auto eq = [](const PortAutMorphism& f, const PortAutMorphism& g) {
        return f.stateMap == g.stateMap && f.portMap == g.portMap;
    };
    if (h1.source != pbA.cospan.left.source || h2.source != pbA.cospan.right.source ||
        h0.source != pbA.cospan.left.target || h1.target != pbB.cospan.left.source ||
        h2.target != pbB.cospan.right.source || h0.target != pbB.cospan.left.target)
        throw Error(ErrorKind::Mismatch, "induced_pullback_morphism: cube shape mismatch");
    if (!eq(compose_morphisms(h1, pbB.cospan.left), compose_morphisms(pbA.cospan.left, h0)) ||
        !eq(compose_morphisms(h2, pbB.cospan.right), compose_morphisms(pbA.cospan.right, h0)))
        throw Error(ErrorKind::Mismatch, "induced_pullback_morphism: cube faces do not commute");

    return mediating_morphism(pbB, compose_morphisms(pbA.projLeft, h1),
                              compose_morphisms(pbA.projRight, h2));
}

}  // namespace copa
