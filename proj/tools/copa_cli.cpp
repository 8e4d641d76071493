// Command-line front end. Links only against the public C API.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "copa/copa.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Session {
    copa_workspace* ws = nullptr;

    Session() : ws(copa_workspace_new()) {}
    ~Session() { copa_workspace_free(ws); }
    Session(const Session&) = delete;
    Session& operator=(const Session&) = delete;
};

int exit_code_for(copa_status s) {
    return (s == COPA_ERR_SIZE_GUARD || s == COPA_ERR_BUDGET) ? kExitResource : kExitFail;
}

// Returns kExitPass or prints the error and returns a failure code.
int require(const Session& s, copa_status st) {
    if (st == COPA_OK) return kExitPass;
    std::cerr << "error: " << copa_last_error(s.ws) << "\n";
    return exit_code_for(st);
}

std::string take(char* owned) {
    std::string out = owned ? owned : "";
    copa_string_free(owned);
    return out;
}

int write_output(const std::string& text, const std::string& outPath) {
    if (outPath.empty()) {
        std::cout << text;
        return kExitPass;
    }
    std::ofstream f(outPath, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write '" << outPath << "'\n";
        return kExitFail;
    }
    f << text;
    return kExitPass;
}

struct LoadOptions {
    std::vector<std::string> files;
    bool builtins = false;
};

void add_load_options(CLI::App* cmd, LoadOptions& opts) {
    cmd->add_option("-f,--file", opts.files, "input file(s) in the text format");
    cmd->add_flag("--builtins", opts.builtins, "preload the builtin example objects");
}

int apply_load(const Session& s, const LoadOptions& opts) {
    if (opts.builtins)
        if (int rc = require(s, copa_load_builtins(s.ws))) return rc;
    for (const std::string& path : opts.files)
        if (int rc = require(s, copa_load_file(s.ws, path.c_str()))) return rc;
    return kExitPass;
}

int apply_env_limits(const Session& s) {
    if (const char* cap = std::getenv("COPA_MAX_STATES"))
        if (int rc = require(s, copa_set_max_states(s.ws, std::strtoull(cap, nullptr, 10))))
            return rc;
    if (const char* budget = std::getenv("COPA_SEARCH_BUDGET"))
        if (int rc =
                require(s, copa_set_search_budget(s.ws, std::strtoull(budget, nullptr, 10))))
            return rc;
    return kExitPass;
}

int export_object(const Session& s, const std::string& name, const std::string& format,
                  bool hideInternal, const std::string& outPath) {
    char* text = nullptr;
    if (int rc = require(s, copa_export(s.ws, name.c_str(), format.c_str(),
                                        hideInternal ? 1 : 0, &text)))
        return rc;
    return write_output(take(text), outPath);
}

int dump_artifacts(const std::string& reportJson, const std::string& dir) {
    auto j = nlohmann::json::parse(reportJson);
    if (!j.contains("artifacts")) return kExitPass;
    for (const auto& [name, doc] : j.at("artifacts").items()) {
        std::string path = dir + "/counterexample_" + name;
        std::ofstream f(path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write '" << path << "'\n";
            return kExitFail;
        }
        f << doc.dump(2) << "\n";
        std::cerr << "counterexample written to " << path << "\n";
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Composition kernel for port automata, connectors and Petri nets"};
    app.require_subcommand(1);

    Session session;
    LoadOptions load;
    std::string outPath;
    std::string format = "json";

    // parse
    auto* cmdParse = app.add_subcommand("parse", "load and validate input files");
    std::vector<std::string> parseFiles;
    cmdParse->add_option("files", parseFiles, "input files")->required();

    // sem
    auto* cmdSem = app.add_subcommand("sem", "composite semantics of a connector");
    std::string semName;
    bool prune = false;
    cmdSem->add_option("connector", semName, "connector name")->required();
    cmdSem->add_flag("--prune", prune, "restrict to reachable states");
    add_load_options(cmdSem, load);
    cmdSem->add_option("--format", format, "json|dot|text");
    cmdSem->add_option("-o,--out", outPath, "output file (default stdout)");

    // pullback / product
    auto* cmdPullback = app.add_subcommand("pullback", "pullback of two morphisms");
    std::string leftName, rightName, prefix = "result";
    cmdPullback->add_option("left", leftName)->required();
    cmdPullback->add_option("right", rightName)->required();
    cmdPullback->add_option("--prefix", prefix, "workspace prefix for results");
    add_load_options(cmdPullback, load);
    cmdPullback->add_option("--format", format, "json|dot|text");
    cmdPullback->add_option("-o,--out", outPath, "output file (default stdout)");

    auto* cmdProduct = app.add_subcommand("product", "product of two automata");
    cmdProduct->add_option("left", leftName)->required();
    cmdProduct->add_option("right", rightName)->required();
    cmdProduct->add_option("--prefix", prefix, "workspace prefix for results");
    add_load_options(cmdProduct, load);
    cmdProduct->add_option("--format", format, "json|dot|text");
    cmdProduct->add_option("-o,--out", outPath, "output file (default stdout)");

    // pushout
    auto* cmdPushout = app.add_subcommand("pushout", "pushout of two connector morphisms");
    cmdPushout->add_option("left", leftName)->required();
    cmdPushout->add_option("right", rightName)->required();
    cmdPushout->add_option("--prefix", prefix, "workspace prefix for results");
    add_load_options(cmdPushout, load);
    cmdPushout->add_option("--format", format, "json|dot|text");
    cmdPushout->add_option("-o,--out", outPath, "output file (default stdout)");

    // simulate-search / iso
    auto* cmdSim = app.add_subcommand("simulate-search", "search for a simulation a -> b");
    std::string simA, simB, simOut = "found_simulation";
    cmdSim->add_option("a", simA)->required();
    cmdSim->add_option("b", simB)->required();
    cmdSim->add_option("--store", simOut, "workspace name for the found morphism");
    add_load_options(cmdSim, load);
    cmdSim->add_option("--format", format, "json|text");
    cmdSim->add_option("-o,--out", outPath, "output file (default stdout)");

    auto* cmdIso = app.add_subcommand("iso", "check two automata for isomorphism");
    cmdIso->add_option("a", simA)->required();
    cmdIso->add_option("b", simB)->required();
    add_load_options(cmdIso, load);

    // check
    auto* cmdCheck = app.add_subcommand("check", "compositionality and law checks");
    cmdCheck->require_subcommand(1);
    auto* checkSpan = cmdCheck->add_subcommand("span", "check one span");
    checkSpan->add_option("left", leftName)->required();
    checkSpan->add_option("right", rightName)->required();
    add_load_options(checkSpan, load);
    checkSpan->add_option("-o,--out", outPath, "report file (default stdout)");
    std::string suite = "all", dumpDir = ".";
    unsigned long long count = 100, seed = 0;
    auto* checkRandom = cmdCheck->add_subcommand("random", "seeded randomized law suites");
    checkRandom->add_option("suite", suite, "pullback|cube|functor|span|petri|all");
    checkRandom->add_option("--count", count, "iterations per suite");
    checkRandom->add_option("--seed", seed, "random seed");
    checkRandom->add_option("--dump-dir", dumpDir, "directory for counterexample files");
    add_load_options(checkRandom, load);
    checkRandom->add_option("-o,--out", outPath, "report file (default stdout)");

    // petri
    auto* cmdEncode = app.add_subcommand("encode-petri", "encode a net as a connector");
    std::string netName;
    cmdEncode->add_option("net", netName)->required();
    add_load_options(cmdEncode, load);
    cmdEncode->add_option("--format", format, "json|dot|text");
    cmdEncode->add_option("-o,--out", outPath, "output file (default stdout)");

    auto* cmdMarking = app.add_subcommand("marking-graph", "reachable marking graph of a net");
    cmdMarking->add_option("net", netName)->required();
    add_load_options(cmdMarking, load);
    cmdMarking->add_option("--format", format, "json|dot|text");
    cmdMarking->add_option("-o,--out", outPath, "output file (default stdout)");

    // reconfigure
    auto* cmdReconf = app.add_subcommand("reconfigure", "apply a rule and transfer the state");
    std::string stateName;
    cmdReconf->add_option("rule", leftName, "rule cmorphism")->required();
    cmdReconf->add_option("match", rightName, "match cmorphism")->required();
    cmdReconf->add_option("--state", stateName, "current host state")->required();
    add_load_options(cmdReconf, load);
    cmdReconf->add_option("-o,--out", outPath, "report file (default stdout)");

    // export
    auto* cmdExport = app.add_subcommand("export", "serialize a named object");
    std::string exportName;
    bool hideInternal = false;
    cmdExport->add_option("name", exportName)->required();
    add_load_options(cmdExport, load);
    cmdExport->add_option("--format", format, "json|dot|text");
    cmdExport->add_flag("--hide-internal", hideInternal,
                        "drop _-prefixed nodes from dot drawings");
    cmdExport->add_option("-o,--out", outPath, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (int rc = apply_env_limits(session)) return rc;
    if (int rc = apply_load(session, load)) return rc;

    if (cmdParse->parsed()) {
        for (const std::string& path : parseFiles)
            if (int rc = require(session, copa_load_file(session.ws, path.c_str()))) return rc;
        std::cout << "ok: " << parseFiles.size() << " file(s) loaded\n";
        return kExitPass;
    }
    if (cmdSem->parsed()) {
        if (int rc = require(session, copa_sem(session.ws, semName.c_str(), prune ? 1 : 0,
                                               "sem_result")))
            return rc;
        return export_object(session, "sem_result", format, false, outPath);
    }
    if (cmdPullback->parsed() || cmdProduct->parsed()) {
        copa_status st = cmdPullback->parsed()
                             ? copa_pullback(session.ws, leftName.c_str(), rightName.c_str(),
                                             prefix.c_str())
                             : copa_product(session.ws, leftName.c_str(), rightName.c_str(),
                                            prefix.c_str());
        if (int rc = require(session, st)) return rc;
        return export_object(session, prefix + "_apex", format, false, outPath);
    }
    if (cmdPushout->parsed()) {
        if (int rc = require(session, copa_pushout(session.ws, leftName.c_str(),
                                                   rightName.c_str(), prefix.c_str())))
            return rc;
        return export_object(session, prefix + "_connector", format, false, outPath);
    }
    if (cmdSim->parsed()) {
        int found = 0;
        if (int rc = require(session, copa_find_simulation(session.ws, simA.c_str(),
                                                           simB.c_str(), simOut.c_str(),
                                                           &found)))
            return rc;
        if (!found) {
            std::cout << "no simulation " << simA << " -> " << simB << "\n";
            return kExitFail;
        }
        return export_object(session, simOut, format == "dot" ? "json" : format, false, outPath);
    }
    if (cmdIso->parsed()) {
        int iso = 0;
        if (int rc = require(session, copa_check_isomorphic(session.ws, simA.c_str(),
                                                            simB.c_str(), &iso)))
            return rc;
        std::cout << (iso ? "isomorphic" : "not isomorphic") << "\n";
        return iso ? kExitPass : kExitFail;
    }
    if (checkSpan->parsed()) {
        int pass = 0;
        char* report = nullptr;
        if (int rc = require(session, copa_check_span(session.ws, leftName.c_str(),
                                                      rightName.c_str(), &pass, &report)))
            return rc;
        if (int rc = write_output(take(report), outPath)) return rc;
        return pass ? kExitPass : kExitFail;
    }
    if (checkRandom->parsed()) {
        int pass = 0;
        char* report = nullptr;
        if (int rc = require(session, copa_check_random(session.ws, suite.c_str(), count, seed,
                                                        &pass, &report)))
            return rc;
        std::string text = take(report);
        if (int rc = write_output(text, outPath)) return rc;
        if (!pass) {
            dump_artifacts(text, dumpDir);
            return kExitFail;
        }
        return kExitPass;
    }
    if (cmdEncode->parsed()) {
        if (int rc = require(session, copa_encode_petri(session.ws, netName.c_str(),
                                                        "encoded_net")))
            return rc;
        return export_object(session, "encoded_net", format, false, outPath);
    }
    if (cmdMarking->parsed()) {
        if (int rc = require(session, copa_marking_graph(session.ws, netName.c_str(),
                                                         "marking_result")))
            return rc;
        return export_object(session, "marking_result", format, false, outPath);
    }
    if (cmdReconf->parsed()) {
        char* report = nullptr;
        if (int rc = require(session,
                             copa_reconfigure(session.ws, leftName.c_str(), rightName.c_str(),
                                              stateName.c_str(), &report)))
            return rc;
        std::string text = take(report);
        if (int rc = write_output(text, outPath)) return rc;
        auto verdict = nlohmann::json::parse(text).value("verdict", "");
        std::cerr << "verdict: " << verdict << "\n";
        return verdict == "INVALID-STATE" ? kExitFail : kExitPass;
    }
    if (cmdExport->parsed())
        return export_object(session, exportName, format, hideInternal, outPath);

    return kExitUsage;
}
