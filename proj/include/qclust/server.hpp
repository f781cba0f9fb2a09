#pragma once

#include "qclust/session.hpp"

#include <string>

namespace httplib {
class Server;
}

namespace qclust {

// QCLUST_PORT when set and valid, else 8737.
int defaultPort();

// HTTP status for an engine error kind.
int statusForError(const std::string& kind);

void registerRoutes(httplib::Server& svr, SessionStore& store);

// Blocks until the server stops; returns nonzero when the port cannot be bound.
int serveHttp(const std::string& host, int port, SessionStore& store);

}  // namespace qclust
