#include "qclust/errors.hpp"
#include "qclust/serialize.hpp"
#include "qclust/server.hpp"
#include "qclust/session.hpp"

#include "doctest.h"
#include "httplib.h"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

using namespace qclust;
using nlohmann::json;

namespace {

SessionSpec glnSpec(int n) {
    SessionSpec s;
    s.kind = "gln";
    s.n = n;
    return s;
}

std::string errorKindOf(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return "";
}

std::filesystem::path tempFile(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("qclust_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST_SUITE("appshell") {

TEST_CASE("serialization round trips") {
    QScalar c = QScalar::monomial(-3, 5) + QScalar::monomial(2, BigInt("123456789012345678901234567890"));
    CHECK(qscalarFromJson(toJson(c)) == c);

    Session s(glnSpec(3));
    s.mutate(0);
    s.mutate(3);
    const QuantumSeed& seed = s.currentSeed();
    for (const auto& x : seed.vars) CHECK(torusElementFromJson(toJson(x), seed.torus) == x);

    json cut = toJson(seed.vars[3], 1);
    if (seed.vars[3].size() > 1) {
        CHECK(cut["truncated"] == true);
        CHECK(cut["terms"].size() == 1);
        CHECK(errorKindOf([&] { torusElementFromJson(cut, seed.torus); }) == "ParseError");
    }
    ExchangeData b = s.state().B;
    CHECK(exchangeFromJson(toJson(b)) == b);
    CHECK(fnv1a("").size() == 16);
    CHECK(fnv1a("a") != fnv1a("b"));
}

TEST_CASE("spec parsing") {
    CHECK(parseCartan("A1^(1)") == IntMatrix{{2, -2}, {-2, 2}});
    CHECK(parseCartan("A2") == IntMatrix{{2, -1}, {-1, 2}});
    CHECK(parseCartan("[[2,-2],[-2,2]]") == parseCartan("affineA1"));
    CHECK(parseWord("0101") == ReducedWord{0, 1, 0, 1});
    CHECK(parseWord("0,1,0") == ReducedWord{0, 1, 0});
    CHECK(parseWord("[1,0]") == ReducedWord{1, 0});
    CHECK(errorKindOf([] { SessionSpec::fromJson(json{{"kind", "banana"}}); }) == "MalformedSpec");
    CHECK(errorKindOf([] { SessionSpec::fromJson(json{{"kind", "gln"}, {"n", 0}}); }) == "MalformedSpec");
    CHECK(errorKindOf([] { SessionSpec::fromJson(json::array()); }) == "MalformedSpec");
    SessionSpec g = SessionSpec::fromJson(json{{"kind", "gls"}, {"cartan", "A1^(1)"}, {"word", "0101"}});
    CHECK(g.word == ReducedWord{0, 1, 0, 1});
    CHECK(SessionSpec::fromJson(g.toJson()).toJson() == g.toJson());
}

TEST_CASE("session mutate, undo and fingerprint") {
    Session s(glnSpec(2));
    std::string f0 = s.fingerprint();
    std::size_t v = s.resolveVertex("(1,1)");
    CHECK(v == 2);
    s.mutate(v);
    CHECK(s.fingerprint() != f0);
    REQUIRE(s.state().labels[v].has_value());
    CHECK(*s.state().labels[v] == Label{1, -1});
    CHECK(s.variable(v).size() == 2);
    CHECK(s.resolveVertex("(1,-1)") == v);
    s.undo();
    CHECK(s.fingerprint() == f0);
    CHECK(errorKindOf([&] { s.undo(); }) == "NothingToUndo");
    CHECK(errorKindOf([&] { s.mutate(1); }) == "FrozenMutation");
    CHECK(s.events().size() >= 2);
}

TEST_CASE("green mode refuses red vertices") {
    Session s(glnSpec(3));
    s.setGreenMode(true);
    s.mutate(0);
    CHECK(errorKindOf([&] { s.mutate(0); }) == "RedVertexMutation");
    CHECK(s.state().path.size() == 1);
    json sum = s.summary();
    CHECK(sum["greenMode"] == true);
}

TEST_CASE("presets and atomic runs") {
    Session s(glnSpec(3));
    auto [refs, mode] = s.preset("kedem");
    CHECK(refs.size() == 6);
    std::vector<json> seq(refs.begin(), refs.end());
    s.run(seq, mode);
    CHECK(s.state().path.size() == 6);
    CHECK(errorKindOf([&] { s.preset("nonsense"); }) == "UnknownSequence");

    Session t(glnSpec(3));
    std::string before = t.fingerprint();
    std::string kind = errorKindOf([&] { t.run({json(0), json(2)}); });
    CHECK(kind == "FrozenMutation");
    CHECK(t.fingerprint() == before);

    Session m(glnSpec(3));
    auto [mu, muMode] = m.preset("mu");
    m.run(std::vector<json>(mu.begin(), mu.end()), muMode);
    auto [mp, mpMode] = m.preset("muprime:1");
    CHECK(mp.size() == 2);
    m.run(std::vector<json>(mp.begin(), mp.end()), mpMode);
    CHECK(m.state().path.size() == 5);
}

TEST_CASE("persist and load") {
    Session s(glnSpec(3));
    s.mutate(0);
    s.mutate(3);
    auto p = tempFile("roundtrip.json");
    persistSession(s, p.string());
    Session r = loadSession(p.string());
    CHECK(r.fingerprint() == s.fingerprint());
    CHECK(r.variable(3) == s.variable(3));

    std::string text;
    {
        std::ifstream in(p);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    {
        std::ofstream out(p, std::ios::trunc);
        out << text.substr(0, text.size() / 2);
    }
    CHECK(errorKindOf([&] { loadSession(p.string()); }) == "ParseError");

    json snap = s.snapshot();
    snap["schemaVersion"] = kSchemaVersion + 1;
    {
        std::ofstream out(p, std::ios::trunc);
        out << snap.dump();
    }
    CHECK(errorKindOf([&] { loadSession(p.string()); }) == "SchemaVersionMismatch");

    snap = s.snapshot();
    snap["fingerprint"] = "0000000000000000";
    CHECK(errorKindOf([&] { Session::fromSnapshot(snap); }) == "FingerprintMismatch");
    std::filesystem::remove(p);
}

TEST_CASE("sessions on a quiver without a seed") {
    SessionSpec c;
    c.kind = "conj";
    c.cartanName = "A2";
    c.cartan = parseCartan("A2");
    Session s(c);
    CHECK_FALSE(s.hasSeed());
    CHECK(errorKindOf([&] { s.currentSeed(); }) == "NoQuantumSeed");
    s.mutate(0);
    CHECK(s.dot().find("digraph") != std::string::npos);
}

TEST_CASE("session store") {
    SessionStore store;
    std::string a = store.create(glnSpec(2));
    std::string b = store.create(glnSpec(3));
    CHECK(a != b);
    CHECK(store.ids().size() == 2);
    CHECK(store.erase(a));
    CHECK_FALSE(store.erase(a));
    CHECK(errorKindOf([&] { store.get(a); }) == "UnknownSession");
}

TEST_CASE("error status mapping") {
    CHECK(statusForError("UnknownSession") == 404);
    CHECK(statusForError("FrozenMutation") == 409);
    CHECK(statusForError("RedVertexMutation") == 409);
    CHECK(statusForError("MalformedSpec") == 422);
    CHECK(statusForError("Internal") == 500);
}

TEST_CASE("HTTP service") {
    SessionStore store;
    httplib::Server svr;
    registerRoutes(svr, store);
    int port = svr.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread th([&] { svr.listen_after_bind(); });
    svr.wait_until_ready();

    httplib::Client cli("127.0.0.1", port);
    auto h = cli.Get("/health");
    REQUIRE(h);
    CHECK(h->status == 200);

    auto c = cli.Post("/sessions", R"({"kind":"gln","n":2})", "application/json");
    REQUIRE(c);
    CHECK(c->status == 201);
    json created = json::parse(c->body);
    std::string id = created["id"];
    std::string base = "/sessions/" + id;
    std::string f0 = created["fingerprint"];

    auto bad = cli.Post("/sessions", R"({"kind":"gln","n":-1})", "application/json");
    REQUIRE(bad);
    CHECK(bad->status == 422);
    CHECK(json::parse(bad->body)["error"]["kind"] == "MalformedSpec");

    auto missing = cli.Get("/sessions/nope");
    REQUIRE(missing);
    CHECK(missing->status == 404);

    auto frozen = cli.Post(base + "/mutate", R"j({"vertex":"(2,0)"})j", "application/json");
    REQUIRE(frozen);
    CHECK(frozen->status == 409);
    CHECK(json::parse(frozen->body)["error"]["kind"] == "FrozenMutation");

    auto m = cli.Post(base + "/mutate", R"j({"vertex":"(1,1)"})j", "application/json");
    REQUIRE(m);
    CHECK(m->status == 200);

    auto var = cli.Get(base + "/variable/2");
    REQUIRE(var);
    CHECK(var->status == 200);
    json vj = json::parse(var->body);
    CHECK(vj["element"]["termCount"] == 2);

    auto u = cli.Post(base + "/undo", "{}", "application/json");
    REQUIRE(u);
    CHECK(u->status == 200);
    auto g = cli.Get(base);
    REQUIRE(g);
    CHECK(json::parse(g->body)["fingerprint"] == f0);

    auto u2 = cli.Post(base + "/undo", "{}", "application/json");
    REQUIRE(u2);
    CHECK(u2->status == 409);

    auto dot = cli.Get(base + "/export.dot");
    REQUIRE(dot);
    CHECK(dot->body.rfind("digraph", 0) == 0);

    auto del = cli.Delete(base);
    REQUIRE(del);
    CHECK(del->status == 200);
    auto gone = cli.Get(base);
    REQUIRE(gone);
    CHECK(gone->status == 404);

    svr.stop();
    th.join();
}

#ifdef QCLUST_CLI_PATH
TEST_CASE("CLI exit codes") {
    auto p = tempFile("cli.json");
    std::string cli = QCLUST_CLI_PATH;
    std::string quiet = " > /dev/null 2>&1";
    int rc = std::system((cli + " seed gln --n 2 --out " + p.string() + quiet).c_str());
    CHECK(WEXITSTATUS(rc) == 0);
    rc = std::system((cli + " mutate --session " + p.string() + " --vertex \"(2,0)\"" + quiet).c_str());
    CHECK(WEXITSTATUS(rc) == 2);
    rc = std::system((cli + " mutate --session " + p.string() + " --vertex \"(1,1)\"" + quiet).c_str());
    CHECK(WEXITSTATUS(rc) == 0);
    rc = std::system((cli + " verify fixtures" + quiet).c_str());
    CHECK(WEXITSTATUS(rc) == 0);
    std::filesystem::remove(p);
}
#endif

}
