#include "copa/dot.hpp"

#include <map>
#include <sstream>

namespace copa {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string ident(const std::string& prefix, std::size_t i) {
    return prefix + std::to_string(i);
}

}  // namespace

std::string automaton_to_dot(const std::string& name, const PortAutomaton& a) {
    std::ostringstream os;
    os << "digraph \"" << escape(name) << "\" {\n";
    os << "  rankdir=LR;\n  node [shape=circle];\n";
    os << "  __start [shape=point, style=invis];\n";
    std::map<StateId, std::string> id;
    std::size_t i = 0;
    for (const StateId& s : a.states) {
        id[s] = ident("s", i++);
        os << "  " << id[s] << " [label=\"" << escape(s) << "\"];\n";
    }
    os << "  __start -> " << id.at(a.initial) << ";\n";
    for (const Transition& t : a.transitions)
        os << "  " << id.at(t.from) << " -> " << id.at(t.to) << " [label=\""
           << (t.label.empty() ? "∅" : escape(label_to_string(t.label))) << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string connector_to_dot(const std::string& name, const Connector& c, bool hideInternal) {
    std::ostringstream os;
    os << "graph \"" << escape(name) << "\" {\n  layout=neato;\n";
    std::map<PortName, std::string> nid;
    std::size_t i = 0;
    for (const PortName& n : c.nodes) {
        nid[n] = ident("n", i++);
        if (hideInternal && !n.empty() && n[0] == '_') continue;
        os << "  " << nid[n] << " [shape=circle, label=\"" << escape(n) << "\"];\n";
    }
    i = 0;
    for (const auto& [pid, aut] : c.primitives) {
        std::string box = ident("p", i++);
        os << "  " << box << " [shape=box, label=\"" << escape(pid) << "\"];\n";
        for (const PortName& n : aut.ports) {
            if (hideInternal && !n.empty() && n[0] == '_') continue;
            os << "  " << box << " -- " << nid.at(n) << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace copa
