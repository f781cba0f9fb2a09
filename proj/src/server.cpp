#include "qclust/server.hpp"

#include "qclust/errors.hpp"
#include "qclust/serialize.hpp"

#include "httplib.h"

#include <cstdlib>
#include <functional>
#include <iostream>

namespace qclust {

namespace {

using Json = nlohmann::json;

void sendJson(httplib::Response& res, int status, const Json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

void sendError(httplib::Response& res, const std::string& kind, const std::string& message) {
    sendJson(res, statusForError(kind), {{"error", {{"kind", kind}, {"message", message}}}});
}

Json parseBody(const httplib::Request& req) {
    if (req.body.empty()) return Json::object();
    try {
        return Json::parse(req.body);
    } catch (const Json::parse_error& e) {
        throw makeError("ParseError", e.what());
    }
}

// Runs fn under the session's lock and maps engine errors to HTTP statuses.
void withSession(SessionStore& store, const httplib::Request& req, httplib::Response& res,
                 const std::function<void(Session&, const std::string&)>& fn) {
    try {
        std::string id = req.matches[1];
        auto entry = store.get(id);
        std::lock_guard lock(entry->mutex);
        fn(entry->session, id);
    } catch (const Error& e) {
        sendError(res, e.kind(), e.what());
    } catch (const std::exception& e) {
        sendError(res, "Internal", e.what());
    }
}

Json summaryWithId(const Session& s, const std::string& id) {
    Json j = s.summary();
    j["id"] = id;
    return j;
}

}  // namespace

int defaultPort() {
    if (const char* p = std::getenv("QCLUST_PORT")) {
        char* end = nullptr;
        long v = std::strtol(p, &end, 10);
        if (end && *end == '\0' && v > 0 && v < 65536) return static_cast<int>(v);
    }
    return 8737;
}

int statusForError(const std::string& kind) {
    if (kind == "UnknownSession") return 404;
    if (kind == "FrozenMutation" || kind == "RedVertexMutation" || kind == "NothingToUndo") return 409;
    if (kind == "Internal" || kind == "LaurentFailure" || kind == "ExactDivisionFailed") return 500;
    return 422;
}

void registerRoutes(httplib::Server& svr, SessionStore& store) {
    svr.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                             {"Access-Control-Allow-Headers", "Content-Type"},
                             {"Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS"}});
    svr.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

    svr.Get("/health", [](const httplib::Request&, httplib::Response& res) { sendJson(res, 200, {{"ok", true}}); });

    svr.Get("/sessions", [&store](const httplib::Request&, httplib::Response& res) {
        sendJson(res, 200, {{"sessions", store.ids()}});
    });

    svr.Post("/sessions", [&store](const httplib::Request& req, httplib::Response& res) {
        try {
            std::string id = store.create(SessionSpec::fromJson(parseBody(req)));
            auto entry = store.get(id);
            std::lock_guard lock(entry->mutex);
            sendJson(res, 201, summaryWithId(entry->session, id));
        } catch (const Error& e) {
            sendError(res, e.kind() == "ParseError" ? "MalformedSpec" : e.kind(), e.what());
        }
    });

    svr.Get(R"(/sessions/([^/]+))", [&store](const httplib::Request& req, httplib::Response& res) {
        withSession(store, req, res, [&](Session& s, const std::string& id) { sendJson(res, 200, summaryWithId(s, id)); });
    });

    svr.Delete(R"(/sessions/([^/]+))", [&store](const httplib::Request& req, httplib::Response& res) {
        std::string id = req.matches[1];
        if (store.erase(id)) sendJson(res, 200, {{"deleted", id}});
        else sendError(res, "UnknownSession", "no session '" + id + "'");
    });

    svr.Post(R"(/sessions/([^/]+)/mutate)", [&store](const httplib::Request& req, httplib::Response& res) {
        withSession(store, req, res, [&](Session& s, const std::string& id) {
            Json body = parseBody(req);
            if (!body.contains("vertex")) throw makeError("UnknownVertex", "body needs a vertex");
            s.mutate(s.resolveVertex(body["vertex"]));
            sendJson(res, 200, summaryWithId(s, id));
        });
    });

    svr.Post(R"(/sessions/([^/]+)/undo)", [&store](const httplib::Request& req, httplib::Response& res) {
        withSession(store, req, res, [&](Session& s, const std::string& id) {
            s.undo();
            sendJson(res, 200, summaryWithId(s, id));
        });
    });

    svr.Post(R"(/sessions/([^/]+)/green)", [&store](const httplib::Request& req, httplib::Response& res) {
        withSession(store, req, res, [&](Session& s, const std::string& id) {
            Json body = parseBody(req);
            if (!body.contains("enabled") || !body["enabled"].is_boolean())
                throw makeError("ParseError", "body needs a boolean enabled");
            s.setGreenMode(body["enabled"].get<bool>());
            sendJson(res, 200, summaryWithId(s, id));
        });
    });

    svr.Post(R"(/sessions/([^/]+)/run)", [&store](const httplib::Request& req, httplib::Response& res) {
        withSession(store, req, res, [&](Session& s, const std::string& id) {
            Json body = parseBody(req);
            if (!body.contains("sequence")) throw makeError("UnknownSequence", "body needs a sequence");
            const Json& seq = body["sequence"];
            if (seq.is_string()) {
                auto [refs, mode] = s.preset(seq.get<std::string>());
                s.run(std::vector<Json>(refs.begin(), refs.end()), mode);
            } else if (seq.is_array()) {
                s.run(std::vector<Json>(seq.begin(), seq.end()));
            } else {
                throw makeError("UnknownSequence", "sequence must be a name or an array");
            }
            sendJson(res, 200, summaryWithId(s, id));
        });
    });

    svr.Get(R"(/sessions/([^/]+)/variable/([^/]+))", [&store](const httplib::Request& req, httplib::Response& res) {
        withSession(store, req, res, [&](Session& s, const std::string&) {
            std::size_t cap = kDefaultTermCap;
            if (req.has_param("cap")) {
                try {
                    cap = std::stoul(req.get_param_value("cap"));
                } catch (const std::exception&) {
                    throw makeError("ParseError", "cap must be a nonnegative integer");
                }
            }
            std::size_t v = s.resolveVertex(Json(std::string(req.matches[2])));
            sendJson(res, 200, s.variableJson(v, cap));
        });
    });

    svr.Get(R"(/sessions/([^/]+)/export\.dot)", [&store](const httplib::Request& req, httplib::Response& res) {
        withSession(store, req, res, [&](Session& s, const std::string&) {
            res.status = 200;
            res.set_content(s.dot(), "text/vnd.graphviz");
        });
    });

    svr.Get(R"(/sessions/([^/]+)/export\.json)", [&store](const httplib::Request& req, httplib::Response& res) {
        withSession(store, req, res, [&](Session& s, const std::string&) { sendJson(res, 200, s.snapshot()); });
    });

    svr.Get(R"(/sessions/([^/]+)/events)", [&store](const httplib::Request& req, httplib::Response& res) {
        withSession(store, req, res, [&](Session& s, const std::string&) { sendJson(res, 200, {{"events", s.events()}}); });
    });
}

int serveHttp(const std::string& host, int port, SessionStore& store) {
    httplib::Server svr;
    registerRoutes(svr, store);
    std::cerr << "listening on " << host << ":" << port << std::endl;
    if (!svr.listen(host, port)) {
        std::cerr << "cannot bind " << host << ":" << port << std::endl;
        return 1;
    }
    return 0;
}

}  // namespace qclust
