#include "copa/copa.h"

#include <cstdlib>
#include <cstring>

#include "copa/checks.hpp"
#include "copa/dot.hpp"
#include "copa/errors.hpp"
#include "copa/json_io.hpp"
#include "copa/reconfig.hpp"
#include "copa/text_format.hpp"

using namespace copa;

struct copa_workspace {
    Workspace ws;
    std::string lastError;
    std::size_t maxStates = kDefaultMaxStates;
    std::uint64_t searchBudget = kDefaultSearchBudget;
};

namespace {

copa_status status_of(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidArgument: return COPA_ERR_INVALID_ARGUMENT;
        case ErrorKind::Mismatch: return COPA_ERR_MISMATCH;
        case ErrorKind::Budget: return COPA_ERR_BUDGET;
        case ErrorKind::SizeGuard: return COPA_ERR_SIZE_GUARD;
        case ErrorKind::Parse: return COPA_ERR_PARSE;
        case ErrorKind::Validation: return COPA_ERR_VALIDATION;
        case ErrorKind::NotFound: return COPA_ERR_NOT_FOUND;
        case ErrorKind::Io: return COPA_ERR_IO;
    }
    return COPA_ERR_INTERNAL;
}

template <typename Fn>
copa_status guarded(copa_workspace* ws, Fn&& fn) {
    if (!ws) return COPA_ERR_INVALID_ARGUMENT;
    ws->lastError.clear();
    try {
        fn();
        return COPA_OK;
    } catch (const Error& e) {
        ws->lastError = e.what();
        return status_of(e.kind());
    } catch (const std::exception& e) {
        ws->lastError = e.what();
        return COPA_ERR_INTERNAL;
    }
}

[[noreturn]] void not_found(const char* kind, const std::string& name) {
    throw Error(ErrorKind::NotFound, std::string("no ") + kind + " named '" + name + "'");
}

std::string arg(const char* s, const char* what) {
    if (!s) throw Error(ErrorKind::InvalidArgument, std::string("null ") + what);
    return s;
}

const PortAutomaton& get_automaton(copa_workspace* ws, const char* name) {
    std::string n = arg(name, "automaton name");
    auto it = ws->ws.automata.find(n);
    if (it == ws->ws.automata.end()) not_found("automaton", n);
    return it->second;
}

const Connector& get_connector(copa_workspace* ws, const char* name) {
    std::string n = arg(name, "connector name");
    auto it = ws->ws.connectors.find(n);
    if (it == ws->ws.connectors.end()) not_found("connector", n);
    return it->second;
}

const PortAutMorphism& get_morphism(copa_workspace* ws, const char* name) {
    std::string n = arg(name, "morphism name");
    auto it = ws->ws.morphisms.find(n);
    if (it == ws->ws.morphisms.end()) not_found("morphism", n);
    return it->second;
}

const ConnectorMorphism& get_cmorphism(copa_workspace* ws, const char* name) {
    std::string n = arg(name, "cmorphism name");
    auto it = ws->ws.connectorMorphisms.find(n);
    if (it == ws->ws.connectorMorphisms.end()) not_found("cmorphism", n);
    return it->second;
}

const PetriNet& get_net(copa_workspace* ws, const char* name) {
    std::string n = arg(name, "net name");
    auto it = ws->ws.nets.find(n);
    if (it == ws->ws.nets.end()) not_found("net", n);
    return it->second;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void give(char** slot, const std::string& value) {
    if (slot) *slot = dup_string(value);
}

void store_pullback(copa_workspace* ws, const PullbackResult& pb, const std::string& prefix) {
    ws->ws.automata[prefix + "_apex"] = pb.apex;
    ws->ws.morphisms[prefix + "_left"] = pb.projLeft;
    ws->ws.morphisms[prefix + "_right"] = pb.projRight;
}

// Name of an equal workspace automaton, or empty.
std::string find_automaton_name(const Workspace& ws, const PortAutomaton& a) {
    for (const auto& [name, known] : ws.automata)
        if (known == a) return name;
    return "";
}

std::string find_connector_name(const Workspace& ws, const Connector& c) {
    for (const auto& [name, known] : ws.connectors)
        if (known == c) return name;
    return "";
}

Json suite_report_json(const std::string& suite, unsigned long long count,
                       unsigned long long seed, const SuiteResult& r) {
    Json j = Json::object();
    j["suite"] = suite;
    j["count"] = count;
    j["seed"] = seed;
    j["pass"] = r.pass;
    j["ran"] = r.ran;
    j["detail"] = r.detail;
    Json arts = Json::object();
    for (const auto& [name, doc] : r.artifacts) arts[name] = Json::parse(doc);
    j["artifacts"] = std::move(arts);
    return j;
}

}  // namespace

extern "C" {

copa_workspace* copa_workspace_new(void) { return new (std::nothrow) copa_workspace(); }

void copa_workspace_free(copa_workspace* ws) { delete ws; }

const char* copa_last_error(const copa_workspace* ws) {
    return ws ? ws->lastError.c_str() : "null workspace";
}

void copa_string_free(char* s) { std::free(s); }

copa_status copa_load_file(copa_workspace* ws, const char* path) {
    return guarded(ws, [&] { parse_file(arg(path, "path"), ws->ws); });
}

copa_status copa_load_string(copa_workspace* ws, const char* text) {
    return guarded(ws, [&] { parse_text(arg(text, "text"), ws->ws); });
}

copa_status copa_load_builtins(copa_workspace* ws) {
    return guarded(ws, [&] {
        Workspace builtin = builtin_workspace();
        for (auto& [k, v] : builtin.automata) ws->ws.automata[k] = std::move(v);
        for (auto& [k, v] : builtin.connectors) ws->ws.connectors[k] = std::move(v);
        for (auto& [k, v] : builtin.morphisms) ws->ws.morphisms[k] = std::move(v);
        for (auto& [k, v] : builtin.connectorMorphisms)
            ws->ws.connectorMorphisms[k] = std::move(v);
        for (auto& [k, v] : builtin.nets) ws->ws.nets[k] = std::move(v);
    });
}

copa_status copa_set_max_states(copa_workspace* ws, unsigned long long cap) {
    return guarded(ws, [&] {
        if (cap == 0) throw Error(ErrorKind::InvalidArgument, "state cap must be positive");
        ws->maxStates = static_cast<std::size_t>(cap);
    });
}

copa_status copa_set_search_budget(copa_workspace* ws, unsigned long long budget) {
    return guarded(ws, [&] {
        if (budget == 0) throw Error(ErrorKind::InvalidArgument, "budget must be positive");
        ws->searchBudget = budget;
    });
}

copa_status copa_sem(copa_workspace* ws, const char* connector, int prune, const char* out) {
    return guarded(ws, [&] {
        const Connector& c = get_connector(ws, connector);
        ws->ws.automata[arg(out, "output name")] =
            sem_connector(c, prune != 0, ws->maxStates).automaton;
    });
}

copa_status copa_reachable(copa_workspace* ws, const char* automaton, const char* out) {
    return guarded(ws, [&] {
        ws->ws.automata[arg(out, "output name")] = reachable(get_automaton(ws, automaton));
    });
}

copa_status copa_pullback(copa_workspace* ws, const char* left_morphism,
                          const char* right_morphism, const char* prefix) {
    return guarded(ws, [&] {
        Cospan c{get_morphism(ws, left_morphism), get_morphism(ws, right_morphism)};
        store_pullback(ws, pullback(c), arg(prefix, "output prefix"));
    });
}

copa_status copa_product(copa_workspace* ws, const char* a, const char* b, const char* prefix) {
    return guarded(ws, [&] {
        store_pullback(ws, product(get_automaton(ws, a), get_automaton(ws, b)),
                       arg(prefix, "output prefix"));
    });
}

copa_status copa_pushout(copa_workspace* ws, const char* left_cmorphism,
                         const char* right_cmorphism, const char* prefix) {
    return guarded(ws, [&] {
        ConnectorSpan s{get_cmorphism(ws, left_cmorphism), get_cmorphism(ws, right_cmorphism)};
        PushoutResult po = pushout(s);
        std::string p = arg(prefix, "output prefix");
        ws->ws.connectors[p + "_connector"] = po.connector;
        ws->ws.connectorMorphisms[p + "_left"] = po.legLeft;
        ws->ws.connectorMorphisms[p + "_right"] = po.legRight;
    });
}

copa_status copa_find_simulation(copa_workspace* ws, const char* a, const char* b,
                                 const char* out, int* found) {
    return guarded(ws, [&] {
        auto f = find_simulation(get_automaton(ws, a), get_automaton(ws, b), ws->searchBudget);
        if (found) *found = f ? 1 : 0;
        if (f) ws->ws.morphisms[arg(out, "output name")] = *f;
    });
}

copa_status copa_check_isomorphic(copa_workspace* ws, const char* a, const char* b, int* iso) {
    return guarded(ws, [&] {
        auto pair =
            check_isomorphic(get_automaton(ws, a), get_automaton(ws, b), ws->searchBudget);
        if (iso) *iso = pair ? 1 : 0;
    });
}

copa_status copa_encode_petri(copa_workspace* ws, const char* net, const char* out_connector) {
    return guarded(ws, [&] {
        ws->ws.connectors[arg(out_connector, "output name")] = encode_net(get_net(ws, net));
    });
}

copa_status copa_marking_graph(copa_workspace* ws, const char* net, const char* out_automaton) {
    return guarded(ws, [&] {
        ws->ws.automata[arg(out_automaton, "output name")] =
            marking_graph(get_net(ws, net), ws->maxStates);
    });
}

copa_status copa_check_span(copa_workspace* ws, const char* left_cmorphism,
                            const char* right_cmorphism, int* pass, char** report_json) {
    return guarded(ws, [&] {
        ConnectorSpan s{get_cmorphism(ws, left_cmorphism), get_cmorphism(ws, right_cmorphism)};
        CompositionalityReport rep = check_compositionality(s, ws->maxStates);
        if (pass) *pass = rep.pass ? 1 : 0;
        give(report_json, compositionality_report_to_json(rep).dump(2) + "\n");
    });
}

copa_status copa_check_random(copa_workspace* ws, const char* suite, unsigned long long count,
                              unsigned long long seed, int* pass, char** report_json) {
    return guarded(ws, [&] {
        SuiteResult r = run_suite(arg(suite, "suite"), static_cast<std::size_t>(count), seed);
        if (pass) *pass = r.pass ? 1 : 0;
        give(report_json, suite_report_json(suite, count, seed, r).dump(2) + "\n");
    });
}

copa_status copa_reconfigure(copa_workspace* ws, const char* rule_cmorphism,
                             const char* match_cmorphism, const char* state,
                             char** report_json) {
    return guarded(ws, [&] {
        TransferReport rep =
            apply_rule(get_cmorphism(ws, rule_cmorphism), get_cmorphism(ws, match_cmorphism),
                       arg(state, "state"), ws->maxStates);
        give(report_json, transfer_report_to_json(rep).dump(2) + "\n");
    });
}

copa_status copa_export(copa_workspace* ws, const char* name, const char* format,
                        int hide_internal, char** out) {
    return guarded(ws, [&] {
        std::string n = arg(name, "object name");
        std::string fmt = arg(format, "format");
        if (fmt != "json" && fmt != "text" && fmt != "dot")
            throw Error(ErrorKind::InvalidArgument, "unknown format '" + fmt + "'");
        std::string result;
        if (auto it = ws->ws.automata.find(n); it != ws->ws.automata.end()) {
            if (fmt == "json") result = automaton_to_json(it->second).dump(2) + "\n";
            else if (fmt == "dot") result = automaton_to_dot(n, it->second);
            else result = serialize_automaton(n, it->second);
        } else if (auto ct = ws->ws.connectors.find(n); ct != ws->ws.connectors.end()) {
            if (fmt == "json") result = connector_to_json(ct->second).dump(2) + "\n";
            else if (fmt == "dot") result = connector_to_dot(n, ct->second, hide_internal != 0);
            else result = serialize_connector(n, ct->second, ws->ws);
        } else if (auto mt = ws->ws.morphisms.find(n); mt != ws->ws.morphisms.end()) {
            if (fmt == "json") {
                result = morphism_to_json(mt->second).dump(2) + "\n";
            } else if (fmt == "dot") {
                throw Error(ErrorKind::InvalidArgument, "morphisms have no dot rendering");
            } else {
                std::string src = find_automaton_name(ws->ws, mt->second.source);
                std::string tgt = find_automaton_name(ws->ws, mt->second.target);
                std::string pre;
                if (src.empty()) {
                    src = n + "_source";
                    pre += serialize_automaton(src, mt->second.source);
                }
                if (tgt.empty()) {
                    tgt = n + "_target";
                    pre += serialize_automaton(tgt, mt->second.target);
                }
                result = pre + serialize_morphism(n, mt->second, src, tgt);
            }
        } else if (auto cm = ws->ws.connectorMorphisms.find(n);
                   cm != ws->ws.connectorMorphisms.end()) {
            if (fmt == "json") {
                result = connector_morphism_to_json(cm->second).dump(2) + "\n";
            } else if (fmt == "dot") {
                throw Error(ErrorKind::InvalidArgument, "cmorphisms have no dot rendering");
            } else {
                std::string src = find_connector_name(ws->ws, cm->second.source);
                std::string tgt = find_connector_name(ws->ws, cm->second.target);
                std::string pre;
                if (src.empty()) {
                    src = n + "_source";
                    pre += serialize_connector(src, cm->second.source, ws->ws);
                }
                if (tgt.empty()) {
                    tgt = n + "_target";
                    pre += serialize_connector(tgt, cm->second.target, ws->ws);
                }
                result = pre + serialize_connector_morphism(n, cm->second, src, tgt);
            }
        } else if (auto nt = ws->ws.nets.find(n); nt != ws->ws.nets.end()) {
            if (fmt == "json") result = net_to_json(nt->second).dump(2) + "\n";
            else if (fmt == "dot") throw Error(ErrorKind::InvalidArgument,
                                               "nets have no dot rendering");
            else result = serialize_net(n, nt->second);
        } else {
            not_found("object", n);
        }
        give(out, result);
    });
}

}  // extern "C"
