#include "copa/text_format.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "copa/errors.hpp"
#include "copa/reo.hpp"

namespace copa {

namespace {

struct Token {
    std::string text;  // identifier/string content or the punctuation itself
    bool word;         // identifier or quoted string
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            if (pos_ >= text_.size()) break;
            int line = line_, col = col_;
            char c = text_[pos_];
            if (c == '"') {
                advance();
                std::string s;
                while (pos_ < text_.size() && text_[pos_] != '"') {
                    s += text_[pos_];
                    advance();
                }
                if (pos_ >= text_.size()) fail(line, col, "unterminated string");
                advance();
                out.push_back({s, true, line, col});
            } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                std::string s;
                while (pos_ < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                        text_[pos_] == '_' || text_[pos_] == '\'')) {
                    s += text_[pos_];
                    advance();
                }
                out.push_back({s, true, line, col});
            } else if (c == '-') {
                advance();
                if (pos_ < text_.size() && text_[pos_] == '>') {
                    advance();
                    out.push_back({"->", false, line, col});
                } else if (pos_ < text_.size() && text_[pos_] == '{') {
                    advance();
                    out.push_back({"-{", false, line, col});
                } else {
                    fail(line, col, "stray '-'");
                }
            } else if (c == '}') {
                advance();
                if (pos_ + 1 < text_.size() && text_[pos_] == '-' && text_[pos_ + 1] == '>') {
                    advance();
                    advance();
                    out.push_back({"}->", false, line, col});
                } else {
                    out.push_back({"}", false, line, col});
                }
            } else if (std::string("{;:,()*=").find(c) != std::string::npos) {
                advance();
                out.push_back({std::string(1, c), false, line, col});
            } else {
                fail(line, col, std::string("unexpected character '") + c + "'");
            }
        }
        return out;
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }
    [[noreturn]] static void fail(int line, int col, const std::string& msg) {
        throw Error(ErrorKind::Parse,
                    std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    Parser(std::vector<Token> tokens, Workspace& ws) : toks_(std::move(tokens)), ws_(ws) {}

    void run() {
        while (!at_end()) {
            const Token& kw = expect_word("block keyword");
            if (kw.text == "automaton") parse_automaton();
            else if (kw.text == "connector") parse_connector();
            else if (kw.text == "morphism") parse_morphism();
            else if (kw.text == "cmorphism") parse_connector_morphism();
            else if (kw.text == "net") parse_net();
            else fail(kw, "unknown block '" + kw.text + "'");
        }
    }

private:
    bool at_end() const { return pos_ >= toks_.size(); }
    const Token& peek() const {
        if (at_end())
            throw Error(ErrorKind::Parse, "unexpected end of input");
        return toks_[pos_];
    }
    const Token& next() {
        const Token& t = peek();
        ++pos_;
        return t;
    }
    [[noreturn]] static void fail(const Token& t, const std::string& msg) {
        throw Error(ErrorKind::Parse,
                    std::to_string(t.line) + ":" + std::to_string(t.col) + ": " + msg);
    }
    const Token& expect_word(const std::string& what) {
        const Token& t = next();
        if (!t.word) fail(t, "expected " + what + ", got '" + t.text + "'");
        return t;
    }
    unsigned expect_number(const std::string& what) {
        const Token& t = expect_word(what);
        for (char c : t.text)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                fail(t, "expected a number for " + what + ", got '" + t.text + "'");
        return static_cast<unsigned>(std::stoul(t.text));
    }
    void expect_punct(const std::string& p) {
        const Token& t = next();
        if (t.word || t.text != p) fail(t, "expected '" + p + "', got '" + t.text + "'");
    }
    bool accept_punct(const std::string& p) {
        if (!at_end() && !peek().word && peek().text == p) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::vector<std::string> word_list() {
        std::vector<std::string> out;
        while (!at_end() && peek().word) out.push_back(next().text);
        return out;
    }
    void check_valid(const std::vector<std::string>& report, const Token& at,
                     const std::string& what) {
        if (!report.empty())
            throw Error(ErrorKind::Validation, std::to_string(at.line) + ":" +
                                                   std::to_string(at.col) + ": invalid " + what +
                                                   ": " + report.front());
    }

    void parse_automaton() {
        const Token& name = expect_word("automaton name");
        expect_punct("{");
        PortAutomaton a;
        while (!accept_punct("}")) {
            const Token& head = expect_word("statement");
            if (head.text == "states") {
                for (const auto& s : word_list()) a.states.insert(s);
                expect_punct(";");
            } else if (head.text == "ports") {
                for (const auto& p : word_list()) a.ports.insert(p);
                expect_punct(";");
            } else if (head.text == "initial") {
                a.initial = expect_word("state").text;
                expect_punct(";");
            } else {
                // transition: <from> -{A,B}-> <to> ;
                Transition t;
                t.from = head.text;
                expect_punct("-{");
                if (!accept_punct("}->")) {
                    t.label.insert(expect_word("port").text);
                    while (accept_punct(",")) t.label.insert(expect_word("port").text);
                    expect_punct("}->");
                }
                t.to = expect_word("state").text;
                expect_punct(";");
                a.transitions.insert(std::move(t));
            }
        }
        check_valid(validate_automaton(a), name, "automaton '" + name.text + "'");
        ws_.automata[name.text] = std::move(a);
    }

    void parse_connector() {
        const Token& name = expect_word("connector name");
        expect_punct("{");
        Connector c;
        while (!accept_punct("}")) {
            const Token& head = expect_word("statement");
            if (head.text == "nodes") {
                for (const auto& n : word_list()) c.nodes.insert(n);
                expect_punct(";");
            } else if (head.text == "primitive") {
                const Token& id = expect_word("primitive id");
                expect_punct(":");
                const Token& kind = expect_word("primitive kind");
                if (kind.text == "automaton") {
                    const Token& ref = expect_word("automaton name");
                    auto it = ws_.automata.find(ref.text);
                    if (it == ws_.automata.end())
                        fail(ref, "unknown automaton '" + ref.text + "'");
                    c.primitives[id.text] = it->second;
                } else {
                    std::vector<PortName> ports;
                    expect_punct("(");
                    ports.push_back(expect_word("port").text);
                    while (accept_punct(",")) ports.push_back(expect_word("port").text);
                    expect_punct(")");
                    try {
                        c.primitives[id.text] =
                            make_primitive(primitive_kind_from_string(kind.text), ports);
                    } catch (const Error& e) {
                        fail(kind, e.what());
                    }
                }
                expect_punct(";");
            } else {
                fail(head, "unknown connector statement '" + head.text + "'");
            }
        }
        check_valid(validate_connector(c), name, "connector '" + name.text + "'");
        ws_.connectors[name.text] = std::move(c);
    }

    std::map<std::string, std::string> arrow_pairs() {
        // a -> b; c -> d; ... until the next keyword or '}'
        std::map<std::string, std::string> out;
        std::string from = expect_word("name").text;
        expect_punct("->");
        out[from] = expect_word("name").text;
        while (accept_punct(",")) {
            from = expect_word("name").text;
            expect_punct("->");
            out[from] = expect_word("name").text;
        }
        expect_punct(";");
        return out;
    }

    void parse_morphism() {
        const Token& name = expect_word("morphism name");
        expect_punct(":");
        const Token& src = expect_word("source automaton");
        expect_punct("->");
        const Token& tgt = expect_word("target automaton");
        if (!ws_.automata.count(src.text)) fail(src, "unknown automaton '" + src.text + "'");
        if (!ws_.automata.count(tgt.text)) fail(tgt, "unknown automaton '" + tgt.text + "'");
        PortAutMorphism f;
        f.source = ws_.automata.at(src.text);
        f.target = ws_.automata.at(tgt.text);
        expect_punct("{");
        while (!accept_punct("}")) {
            const Token& head = expect_word("statement");
            if (head.text == "states") {
                for (const auto& [a, b] : arrow_pairs()) f.stateMap[a] = b;
            } else if (head.text == "ports") {
                for (const auto& [a, b] : arrow_pairs()) f.portMap[a] = b;
            } else {
                fail(head, "unknown morphism statement '" + head.text + "'");
            }
        }
        check_valid(validate_morphism(f), name, "morphism '" + name.text + "'");
        ws_.morphisms[name.text] = std::move(f);
    }

    void parse_connector_morphism() {
        const Token& name = expect_word("cmorphism name");
        expect_punct(":");
        const Token& src = expect_word("source connector");
        expect_punct("->");
        const Token& tgt = expect_word("target connector");
        if (!ws_.connectors.count(src.text)) fail(src, "unknown connector '" + src.text + "'");
        if (!ws_.connectors.count(tgt.text)) fail(tgt, "unknown connector '" + tgt.text + "'");
        ConnectorMorphism f;
        f.source = ws_.connectors.at(src.text);
        f.target = ws_.connectors.at(tgt.text);
        expect_punct("{");
        while (!accept_punct("}")) {
            const Token& head = expect_word("statement");
            if (head.text == "primitives") {
                for (const auto& [a, b] : arrow_pairs()) f.primMap[a] = b;
            } else if (head.text == "nodes") {
                for (const auto& [a, b] : arrow_pairs()) f.nodeMap[a] = b;
            } else if (head.text == "witness") {
                const Token& id = expect_word("primitive id");
                if (!f.source.primitives.count(id.text) || !f.primMap.count(id.text))
                    fail(id, "witness for unknown primitive '" + id.text + "'");
                PortAutMorphism w;
                w.source = f.target.primitives.at(f.primMap.at(id.text));
                w.target = f.source.primitives.at(id.text);
                expect_punct("{");
                while (!accept_punct("}")) {
                    const Token& inner = expect_word("statement");
                    if (inner.text == "states") {
                        for (const auto& [a, b] : arrow_pairs()) w.stateMap[a] = b;
                    } else if (inner.text == "ports") {
                        for (const auto& [a, b] : arrow_pairs()) w.portMap[a] = b;
                    } else {
                        fail(inner, "unknown witness statement '" + inner.text + "'");
                    }
                }
                f.witnesses[id.text] = std::move(w);
            } else {
                fail(head, "unknown cmorphism statement '" + head.text + "'");
            }
        }
        // Missing witnesses are synthesized by a port-pinned simulation search.
        for (const auto& [id, aut] : f.source.primitives) {
            if (f.witnesses.count(id)) continue;
            auto pm = f.primMap.find(id);
            if (pm == f.primMap.end() || !f.target.primitives.count(pm->second))
                throw Error(ErrorKind::Validation,
                            std::to_string(name.line) + ":" + std::to_string(name.col) +
                                ": invalid cmorphism '" + name.text +
                                "': primMap missing or invalid for '" + id + "'");
            std::map<PortName, PortName> pinned;
            for (const PortName& n : aut.ports) {
                auto nm = f.nodeMap.find(n);
                if (nm == f.nodeMap.end())
                    throw Error(ErrorKind::Validation,
                                std::to_string(name.line) + ":" + std::to_string(name.col) +
                                    ": invalid cmorphism '" + name.text +
                                    "': nodeMap missing node '" + n + "'");
                pinned[n] = nm->second;
            }
            auto w = find_simulation_fixed_ports(f.target.primitives.at(pm->second), aut, pinned);
            if (!w)
                throw Error(ErrorKind::Validation,
                            std::to_string(name.line) + ":" + std::to_string(name.col) +
                                ": invalid cmorphism '" + name.text +
                                "': no witness simulation exists for '" + id + "'");
            f.witnesses[id] = *w;
        }
        check_valid(validate_connector_morphism(f), name, "cmorphism '" + name.text + "'");
        ws_.connectorMorphisms[name.text] = std::move(f);
    }

    void parse_net() {
        const Token& name = expect_word("net name");
        expect_punct("{");
        PetriNet n;
        while (!accept_punct("}")) {
            const Token& head = expect_word("statement");
            if (head.text == "transitions") {
                for (const auto& t : word_list()) n.transitions.insert(t);
                expect_punct(";");
            } else if (head.text == "place") {
                const Token& id = expect_word("place id");
                Place p;
                expect_punct("{");
                while (!accept_punct("}")) {
                    const Token& key = expect_word("place field");
                    expect_punct(":");
                    if (key.text == "in" || key.text == "out") {
                        auto& arcs = key.text == "in" ? p.in : p.out;
                        while (!at_end() && peek().word) {
                            std::string t = next().text;
                            unsigned w = 1;
                            if (accept_punct("*")) w = expect_number("arc weight");
                            arcs[t] += w;
                        }
                    } else if (key.text == "tokens") {
                        p.tokens = expect_number("token count");
                    } else if (key.text == "cap") {
                        p.capacity = expect_number("capacity");
                    } else {
                        fail(key, "unknown place field '" + key.text + "'");
                    }
                    accept_punct(";");
                }
                n.places[id.text] = std::move(p);
                accept_punct(";");
            } else {
                fail(head, "unknown net statement '" + head.text + "'");
            }
        }
        check_valid(validate_net(n), name, "net '" + name.text + "'");
        ws_.nets[name.text] = std::move(n);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    Workspace& ws_;
};

bool plain_word(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'') return false;
    return true;
}

std::string quoted(const std::string& s) { return plain_word(s) ? s : "\"" + s + "\""; }

void write_pairs(std::ostream& os, const char* key,
                 const std::map<std::string, std::string>& m, const char* indent) {
    if (m.empty()) return;
    os << indent << key << " ";
    bool first = true;
    for (const auto& [a, b] : m) {
        if (!first) os << ", ";
        first = false;
        os << quoted(a) << " -> " << quoted(b);
    }
    os << ";\n";
}

}  // namespace

void parse_text(const std::string& text, Workspace& ws) {
    if (Lexer(text).run().empty())
        throw Error(ErrorKind::Parse, "1:1: empty input");
    Parser(Lexer(text).run(), ws).run();
}

void parse_file(const std::string& path, Workspace& ws) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    parse_text(buf.str(), ws);
}

std::string serialize_automaton(const std::string& name, const PortAutomaton& a) {
    std::ostringstream os;
    os << "automaton " << name << " {\n  states";
    for (const StateId& s : a.states) os << " " << quoted(s);
    os << ";\n  ports";
    for (const PortName& p : a.ports) os << " " << quoted(p);
    os << ";\n  initial " << quoted(a.initial) << ";\n";
    for (const Transition& t : a.transitions) {
        os << "  " << quoted(t.from) << " -{";
        bool first = true;
        for (const PortName& p : t.label) {
            if (!first) os << ",";
            first = false;
            os << quoted(p);
        }
        os << "}-> " << quoted(t.to) << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string serialize_connector(const std::string& name, const Connector& c,
                                const Workspace& ws) {
    std::ostringstream os;
    // Primitives matching a named workspace automaton serialize by reference;
    // the rest are emitted as standalone automaton blocks first.
    std::map<std::string, std::string> refs;
    for (const auto& [id, aut] : c.primitives) {
        for (const auto& [autName, known] : ws.automata)
            if (known == aut) {
                refs[id] = autName;
                break;
            }
        if (!refs.count(id)) {
            refs[id] = name + "_" + id;
            os << serialize_automaton(refs[id], aut);
        }
    }
    os << "connector " << name << " {\n  nodes";
    for (const PortName& n : c.nodes) os << " " << quoted(n);
    os << ";\n";
    for (const auto& [id, _] : c.primitives)
        os << "  primitive " << quoted(id) << " : automaton " << refs.at(id) << ";\n";
    os << "}\n";
    return os.str();
}

std::string serialize_morphism(const std::string& name, const PortAutMorphism& f,
                               const std::string& sourceName, const std::string& targetName) {
    std::ostringstream os;
    os << "morphism " << name << " : " << sourceName << " -> " << targetName << " {\n";
    write_pairs(os, "states", f.stateMap, "  ");
    write_pairs(os, "ports", f.portMap, "  ");
    os << "}\n";
    return os.str();
}

std::string serialize_connector_morphism(const std::string& name, const ConnectorMorphism& f,
                                         const std::string& sourceName,
                                         const std::string& targetName) {
    std::ostringstream os;
    os << "cmorphism " << name << " : " << sourceName << " -> " << targetName << " {\n";
    write_pairs(os, "primitives", f.primMap, "  ");
    write_pairs(os, "nodes", f.nodeMap, "  ");
    for (const auto& [id, w] : f.witnesses) {
        os << "  witness " << quoted(id) << " {\n";
        write_pairs(os, "states", w.stateMap, "    ");
        write_pairs(os, "ports", w.portMap, "    ");
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

std::string serialize_net(const std::string& name, const PetriNet& n) {
    std::ostringstream os;
    os << "net " << name << " {\n  transitions";
    for (const std::string& t : n.transitions) os << " " << quoted(t);
    os << ";\n";
    for (const auto& [id, p] : n.places) {
        os << "  place " << quoted(id) << " {";
        auto arcs = [&](const char* key, const std::map<std::string, unsigned>& m) {
            if (m.empty()) return;
            os << " " << key << ":";
            for (const auto& [t, w] : m) {
                os << " " << quoted(t);
                if (w != 1) os << "*" << w;
            }
            os << ";";
        };
        arcs("in", p.in);
        arcs("out", p.out);
        os << " tokens: " << p.tokens << "; cap: " << p.capacity << " }\n";
    }
    os << "}\n";
    return os.str();
}

Workspace builtin_workspace() {
    ExampleSet ex = build_examples();
    Workspace ws;
    ws.connectors["ring"] = ex.ring;
    ws.automata["ring_behavior"] = ex.ringBehavior;
    ws.automata["ring_behavior_full"] = ex.ringBehaviorFull;
    ws.automata["tri_loop"] = ex.sampleSimulation.source;
    ws.automata["ab_loop"] = ex.sampleSimulation.target;
    ws.morphisms["sample_sim"] = ex.sampleSimulation;
    ws.automata["phase"] = ex.ringCospan.left.target;
    ws.automata["seq_left"] = ex.ringCospan.left.source;
    ws.automata["seq_right"] = ex.ringCospan.right.source;
    ws.morphisms["seq_left_to_phase"] = ex.ringCospan.left;
    ws.morphisms["seq_right_to_phase"] = ex.ringCospan.right;
    ws.connectors["iface"] = ex.insertSpan.left.source;
    ws.connectors["patch"] = ex.insertSpan.left.target;
    ws.connectors["host"] = ex.insertSpan.right.target;
    ws.connectorMorphisms["insert_rule"] = ex.insertSpan.left;
    ws.connectorMorphisms["insert_match"] = ex.insertSpan.right;
    ws.nets["ring_net"] = example_net();
    return ws;
}

}  // namespace copa
