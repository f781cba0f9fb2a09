// Command-line front end: seeds, sessions, sequences, verification suites, exports and the HTTP service.
#include "qclust/characters.hpp"
#include "qclust/errors.hpp"
#include "qclust/serialize.hpp"
#include "qclust/server.hpp"
#include "qclust/session.hpp"
#include "qclust/suites.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace qclust;
using Json = nlohmann::json;

namespace {

constexpr int kVerificationFailed = 1;
constexpr int kEngineError = 2;

int fail(const Error& e) {
    std::cout << Json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}}.dump() << std::endl;
    return kEngineError;
}

void emit(const Json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << std::endl; }

void writeText(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out || !(out << text)) throw makeError("IOError", "cannot write " + path);
}

// A JSON array of vertex references, or whitespace separated tokens.
std::vector<Json> readSequenceFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw makeError("IOError", "cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        try {
            Json j = Json::parse(text);
            return std::vector<Json>(j.begin(), j.end());
        } catch (const Json::parse_error& e) {
            throw makeError("ParseError", e.what());
        }
    }
    std::vector<Json> out;
    std::istringstream is(text);
    for (std::string tok; is >> tok;) out.emplace_back(tok);
    return out;
}

Session openSession(const std::string& path, int n) {
    if (!path.empty()) return loadSession(path);
    SessionSpec spec;
    spec.kind = "gln";
    spec.n = n;
    return Session(spec);
}

std::vector<int> parseIntList(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ',');) {
        if (tok.empty()) continue;
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw makeError("ParseError", "not an integer: " + tok);
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact quantum cluster algebra engine"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Indent JSON output");

    // seed
    auto* seed = app.add_subcommand("seed", "Create a session snapshot");
    seed->require_subcommand(1);
    std::string seedOut, cartan, word;
    int seedN = 2;
    bool green = false;
    auto* seedGln = seed->add_subcommand("gln", "GL_n seed");
    seedGln->add_option("--n", seedN, "Rank n")->required();
    auto* seedGls = seed->add_subcommand("gls", "Seed of a reduced word");
    seedGls->add_option("--cartan", cartan, "Cartan name (A1^(1), A<r>) or JSON matrix")->required();
    seedGls->add_option("--word", word, "Word, e.g. 0101")->required();
    auto* seedConj = seed->add_subcommand("conj", "Conjectural block matrix");
    seedConj->add_option("--cartan", cartan, "Cartan name or JSON matrix")->required();
    for (auto* sc : {seedGln, seedGls, seedConj}) {
        sc->add_option("--out", seedOut, "Snapshot path");
        sc->add_flag("--green", green, "Restrict mutations to green vertices");
    }

    // mutate / undo
    std::string sessionPath, vertex;
    auto* mutate = app.add_subcommand("mutate", "Mutate a session snapshot in place");
    mutate->add_option("--session", sessionPath, "Snapshot path")->required();
    mutate->add_option("--vertex", vertex, "Label, id or position")->required();
    auto* undo = app.add_subcommand("undo", "Undo the last mutation of a snapshot");
    undo->add_option("--session", sessionPath, "Snapshot path")->required();

    // run
    std::string sequence;
    int runN = 2;
    auto* run = app.add_subcommand("run", "Apply mu, muprime:J, kedem or a sequence file");
    run->add_option("--sequence", sequence, "mu | muprime:J | kedem | path")->required();
    run->add_option("--session", sessionPath, "Snapshot to update; a fresh GL_n seed otherwise");
    run->add_option("--n", runN, "Rank for a fresh GL_n seed");

    // verify
    std::string suite;
    int verifyN = 0;
    bool verbose = false;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "Suite name")->required();
    verify->add_option("--n", verifyN, "Largest n (suite default when omitted)");
    verify->add_flag("--verbose", verbose, "Print every report as JSON");

    // export
    bool asDot = false, asJson = false;
    std::string exportOut;
    int exportN = 2;
    auto* exportCmd = app.add_subcommand("export", "Export the current quiver");
    auto* dotFlag = exportCmd->add_flag("--dot", asDot, "Graphviz DOT");
    auto* jsonFlag = exportCmd->add_flag("--json", asJson, "JSON");
    dotFlag->excludes(jsonFlag);
    exportCmd->add_option("--session", sessionPath, "Snapshot path");
    exportCmd->add_option("--n", exportN, "Rank for a fresh GL_n seed");
    exportCmd->add_option("--out", exportOut, "Output path");

    // variable
    std::size_t cap = kDefaultTermCap;
    auto* variable = app.add_subcommand("variable", "Print a cluster variable of a snapshot");
    variable->add_option("--session", sessionPath, "Snapshot path")->required();
    variable->add_option("--vertex", vertex, "Label, id or position")->required();
    variable->add_option("--cap", cap, "Term cap");

    // class-of-p
    int classN = 3, k = 1, l = 0;
    std::string wedge;
    bool hasWedge = false;
    auto* classOfP = app.add_subcommand("class-of-p", "K-theory class [P_{k,l}] in the initial torus");
    classOfP->add_option("--n", classN, "Rank n");
    classOfP->add_option("--k", k, "k")->required();
    classOfP->add_option("--l", l, "l")->required();
    auto* wedgeOpt = classOfP->add_option("--wedge", wedge, "Comma separated j_1,...,j_{n-k}");
    classOfP->add_option("--cap", cap, "Term cap");

    // qsystem
    int qn = 3, qk = 1, ql = 1;
    auto* qsystem = app.add_subcommand("qsystem", "Check the Q-system on rectangular Schur polynomials");
    qsystem->add_option("--n", qn, "n")->required();
    qsystem->add_option("--k", qk, "k")->required();
    qsystem->add_option("--l", ql, "l")->required();

    // serve
    int port = defaultPort();
    std::string host = "127.0.0.1";
    auto* serve = app.add_subcommand("serve", "Start the JSON session service");
    serve->add_option("--port", port, "Port (QCLUST_PORT or 8737 by default)");
    serve->add_option("--host", host, "Bind address");

    CLI11_PARSE(app, argc, argv);
    hasWedge = wedgeOpt->count() > 0;

    try {
        if (*seed) {
            SessionSpec spec;
            spec.greenMode = green;
            if (*seedGln) {
                spec.kind = "gln";
                spec.n = seedN;
                spec = SessionSpec::fromJson(spec.toJson());
            } else {
                Json j{{"kind", *seedGls ? "gls" : "conj"}, {"cartan", cartan}, {"greenMode", green}};
                if (*seedGls) j["word"] = word;
                spec = SessionSpec::fromJson(j);
            }
            Session s(spec);
            if (!seedOut.empty()) persistSession(s, seedOut);
            emit(s.summary(), pretty);
            return 0;
        }
        if (*mutate) {
            Session s = loadSession(sessionPath);
            s.mutate(s.resolveVertex(Json(vertex)));
            persistSession(s, sessionPath);
            emit(s.summary(), pretty);
            return 0;
        }
        if (*undo) {
            Session s = loadSession(sessionPath);
            s.undo();
            persistSession(s, sessionPath);
            emit(s.summary(), pretty);
            return 0;
        }
        if (*run) {
            Session s = openSession(sessionPath, runN);
            if (sequence == "mu" || sequence == "kedem" || sequence.rfind("muprime:", 0) == 0) {
                auto [refs, mode] = s.preset(sequence);
                s.run(std::vector<Json>(refs.begin(), refs.end()), mode);
            } else {
                s.run(readSequenceFile(sequence));
            }
            if (!sessionPath.empty()) persistSession(s, sessionPath);
            emit(s.summary(), pretty);
            return 0;
        }
        if (*verify) {
            auto t0 = std::chrono::steady_clock::now();
            ReportBook book = runSuite(suite, verifyN);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            for (const auto& r : book.reports) {
                if (verbose) std::cout << r.toJson().dump() << '\n';
                else std::cout << (r.ok ? "PASS " : "FAIL ") << r.check << ' ' << r.params.dump() << '\n';
            }
            Json summary{{"suite", suite}, {"reports", book.reports.size()},
                         {"failures", book.failures()}, {"seconds", secs}};
            if (!book.ok()) {
                summary["error"] = {{"kind", "VerificationFailed"}, {"firstFailure", book.firstFailure()->toJson()}};
                std::cout << summary.dump() << std::endl;
                return kVerificationFailed;
            }
            std::cout << summary.dump() << std::endl;
            return 0;
        }
        if (*exportCmd) {
            Session s = openSession(sessionPath, exportN);
            if (asDot) {
                writeText(exportOut, s.dot());
            } else {
                const SessionState& st = s.state();
                Json j{{"exchange", toJson(st.B)},
                       {"L", st.L ? Json(*st.L) : Json(nullptr)},
                       {"framed", st.framed ? toJson(*st.framed) : Json(nullptr)},
                       {"fingerprint", s.fingerprint()}};
                writeText(exportOut, pretty ? j.dump(2) : j.dump());
            }
            return 0;
        }
        if (*variable) {
            Session s = loadSession(sessionPath);
            emit(s.variableJson(s.resolveVertex(Json(vertex)), cap), pretty);
            return 0;
        }
        if (*classOfP) {
            if (classN < 2) throw makeError("OutOfRange", "n must be at least 2");
            GLnContext ctx(classN);
            KClass c = hasWedge ? ctx.wedgeClass(k, l, parseIntList(wedge)) : ctx.classOfP(k, l);
            emit({{"n", classN}, {"k", k}, {"l", l}, {"provenance", c.provenance},
                  {"element", toJson(c.element, cap)},
                  {"text", c.element.size() <= cap ? Json(c.element.toString()) : Json(nullptr)}},
                 pretty);
            return 0;
        }
        if (*qsystem) {
            Report r = qSystemCheck(qn, qk, ql);
            Json j = r.toJson();
            SymPoly sq = schurRect(qn, qk, ql);
            j["schur"] = sq.toString();
            j["lhs"] = (sq * sq).toString();
            j["rhs"] = (schurRect(qn, qk, ql + 1) * schurRect(qn, qk, ql - 1) +
                        schurRect(qn, qk - 1, ql) * schurRect(qn, qk + 1, ql)).toString();
            j["dimension"] = dimensionOf(qn, qk, ql).get_str();
            emit(j, pretty);
            return r.ok ? 0 : kVerificationFailed;
        }
        if (*serve) {
            SessionStore store;
            return serveHttp(host, port, store);
        }
    } catch (const Error& e) {
        return fail(e);
    }
    return 0;
}
