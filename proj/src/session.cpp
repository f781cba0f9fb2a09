#include "qclust/session.hpp"

#include "qclust/errors.hpp"
#include "qclust/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace qclust {

namespace {

bool allDigits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

IntMatrix cartanFromJson(const nlohmann::json& j, std::string& name) {
    if (j.is_string()) {
        name = j.get<std::string>();
        return parseCartan(name);
    }
    if (!j.is_array()) throw makeError("MalformedSpec", "cartan must be a name or a matrix");
    name.clear();
    try {
        return j.get<IntMatrix>();
    } catch (const nlohmann::json::exception&) {
        throw makeError("MalformedSpec", "cartan matrix must hold integers");
    }
}

void syncLabels(SessionState& st) {
    if (st.labels.empty()) return;
    for (std::size_t i = 0; i < st.labels.size(); ++i)
        st.B.labels[i] = st.labels[i] ? st.labels[i]->str() : st.B.indices[i] + "'";
}

}  // namespace

IntMatrix parseCartan(const std::string& text) {
    std::string t = lower(text);
    t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
    if (t == "a1^(1)" || t == "a1(1)" || t == "affinea1" || t == "a1~") return affineA1().A;
    if (t.size() >= 2 && t[0] == 'a' && allDigits(t.substr(1))) {
        int r = std::stoi(t.substr(1));
        if (r < 1 || r > 12) throw makeError("MalformedSpec", "type A rank must lie in [1,12]");
        return typeA(static_cast<std::size_t>(r)).A;
    }
    if (!t.empty() && t[0] == '[') {
        try {
            return nlohmann::json::parse(t).get<IntMatrix>();
        } catch (const nlohmann::json::exception& e) {
            throw makeError("MalformedSpec", std::string("cartan matrix: ") + e.what());
        }
    }
    throw makeError("MalformedSpec", "unknown Cartan datum '" + text + "'");
}

ReducedWord parseWord(const std::string& text) {
    ReducedWord w;
    if (!text.empty() && text[0] == '[') {
        try {
            for (int x : nlohmann::json::parse(text).get<std::vector<int>>()) {
                if (x < 0) throw makeError("MalformedSpec", "word letters are nonnegative");
                w.push_back(static_cast<std::size_t>(x));
            }
        } catch (const nlohmann::json::exception& e) {
            throw makeError("MalformedSpec", std::string("word: ") + e.what());
        }
        return w;
    }
    for (char c : text) {
        if (c == ',' || c == ' ') continue;
        if (!std::isdigit(static_cast<unsigned char>(c))) throw makeError("MalformedSpec", "word letters are digits");
        w.push_back(static_cast<std::size_t>(c - '0'));
    }
    return w;
}

nlohmann::json SessionSpec::toJson() const {
    nlohmann::json j{{"kind", kind}, {"greenMode", greenMode}};
    if (kind == "gln") j["n"] = n;
    if (kind == "gls" || kind == "conj") {
        if (cartanName.empty()) j["cartan"] = cartan;
        else j["cartan"] = cartanName;
    }
    if (kind == "gls") j["word"] = word;
    return j;
}

SessionSpec SessionSpec::fromJson(const nlohmann::json& j) {
    if (!j.is_object()) throw makeError("MalformedSpec", "spec must be an object");
    if (!j.contains("kind") || !j["kind"].is_string()) throw makeError("MalformedSpec", "spec needs a kind");
    SessionSpec s;
    s.kind = j["kind"].get<std::string>();
    if (j.contains("greenMode")) {
        if (!j["greenMode"].is_boolean()) throw makeError("MalformedSpec", "greenMode must be boolean");
        s.greenMode = j["greenMode"].get<bool>();
    }
    if (s.kind == "gln") {
        if (!j.contains("n") || !j["n"].is_number_integer()) throw makeError("MalformedSpec", "gln needs integer n");
        s.n = j["n"].get<int>();
        if (s.n < 2 || s.n > 12) throw makeError("MalformedSpec", "n must lie in [2,12]");
    } else if (s.kind == "gls" || s.kind == "conj") {
        if (!j.contains("cartan")) throw makeError("MalformedSpec", s.kind + " needs a cartan");
        s.cartan = cartanFromJson(j["cartan"], s.cartanName);
        if (s.kind == "gls") {
            if (!j.contains("word")) throw makeError("MalformedSpec", "gls needs a word");
            const auto& w = j["word"];
            if (w.is_string()) s.word = parseWord(w.get<std::string>());
            else if (w.is_array()) s.word = parseWord(w.dump());
            else throw makeError("MalformedSpec", "word must be a string or an array");
            if (s.word.empty()) throw makeError("MalformedSpec", "word must be nonempty");
        }
    } else {
        throw makeError("MalformedSpec", "kind must be gln, gls or conj");
    }
    return s;
}

Session::Session(SessionSpec spec) : spec_(std::move(spec)), initialSpec_(spec_) {
    SessionState st;
    std::optional<QuantumSeed> seed;
    try {
        if (spec_.kind == "gln") {
            CompatiblePair p = buildGLnPair(spec_.n);
            for (const auto& lab : glnIndexLabels(spec_.n)) st.labels.push_back(lab);
            seed = initialSeed(p, "GL" + std::to_string(spec_.n));
            st.B = p.B;
            st.L = p.L;
        } else if (spec_.kind == "gls") {
            CartanDatum A = makeCartan(spec_.cartan);
            for (std::size_t x : spec_.word)
                if (x >= A.rank()) throw makeError("MalformedSpec", "word letter outside the Cartan rank");
            GlsPair g = glsPair(A, spec_.word);
            seed = initialSeed(g.pair, "gls");
            st.B = g.pair.B;
            st.L = g.pair.L;
        } else if (spec_.kind == "conj") {
            makeCartan(spec_.cartan);
            st.B = buildConjecturalB(spec_.cartan);
        } else {
            throw makeError("MalformedSpec", "kind must be gln, gls or conj");
        }
    } catch (const Error& e) {
        if (e.kind() == "MalformedSpec") throw;
        throw makeError("MalformedSpec", e.what());
    }
    syncLabels(st);
    if (!st.B.exchangeable().empty() && isSkewSymmetric(st.B.principalPart())) st.framed = frame(st.B);
    if (spec_.greenMode && !st.framed) throw makeError("MalformedSpec", "green mode needs a skew-symmetric principal part");
    stack_.push_back(std::move(st));
    seeds_.push_back(std::move(seed));
}

std::size_t Session::resolveVertex(const nlohmann::json& ref, VertexMode mode) const {
    const ExchangeData& B = state().B;
    if (ref.is_number_integer()) {
        long i = ref.get<long>();
        if (i < 0 || static_cast<std::size_t>(i) >= B.size())
            throw makeError("UnknownVertex", "position " + std::to_string(i) + " out of range");
        return static_cast<std::size_t>(i);
    }
    if (!ref.is_string()) throw makeError("UnknownVertex", "vertex must be a string or an integer");
    std::string s = ref.get<std::string>();
    auto byLabel = [&]() -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < B.size(); ++i)
            if (B.labels[i] == s) return i;
        return std::nullopt;
    };
    auto byId = [&]() -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < B.size(); ++i)
            if (B.indices[i] == s) return i;
        return std::nullopt;
    };
    std::optional<std::size_t> hit;
    if (mode != VertexMode::Id) hit = byLabel();
    if (!hit && mode != VertexMode::Label) hit = byId();
    if (!hit && mode == VertexMode::Auto && allDigits(s) && s.size() < 9) {
        std::size_t i = std::stoul(s);
        if (i < B.size()) hit = i;
    }
    if (!hit) throw makeError("UnknownVertex", "no vertex '" + s + "'");
    return *hit;
}

void Session::mutate(std::size_t v) {
    const SessionState& cur = state();
    if (v >= cur.B.size()) throw makeError("UnknownVertex", "position out of range");
    if (cur.B.frozen[v]) throw makeError("FrozenMutation", "vertex " + cur.B.labels[v] + " is frozen");
    std::size_t c = cur.B.column(v);
    if (spec_.greenMode && !isGreen(*cur.framed, c))
        throw makeError("RedVertexMutation", "vertex " + cur.B.labels[v] + " is red");
    SessionState next;
    next.B = mutateB(cur.B, v);
    if (cur.L) next.L = mutateL(*cur.L, cur.B, v);
    next.labels = cur.labels;
    if (!next.labels.empty()) next.labels[v] = labelAfterMutation(cur.labels, cur.B.frozen, v);
    syncLabels(next);
    if (cur.framed) next.framed = mutateGreen(*cur.framed, c, false);
    next.path = cur.path;
    next.path.push_back(v);
    events_.push_back({{"op", "mutate"}, {"vertex", cur.B.indices[v]}});
    stack_.push_back(std::move(next));
    seeds_.emplace_back();
}

void Session::undo() {
    if (stack_.size() == 1) throw makeError("NothingToUndo", "already at the initial seed");
    stack_.pop_back();
    seeds_.pop_back();
    events_.push_back({{"op", "undo"}});
}

void Session::setGreenMode(bool on) {
    if (on && !state().framed) throw makeError("GreenModeUnavailable", "no framing for this seed");
    spec_.greenMode = on;
    events_.push_back({{"op", "green"}, {"enabled", on}});
}

std::pair<std::vector<std::string>, VertexMode> Session::preset(const std::string& name) const {
    std::vector<std::string> out;
    auto needGln = [&] {
        if (spec_.kind != "gln") throw makeError("UnknownSequence", name + " is defined for gln sessions only");
    };
    if (name == "mu") {
        needGln();
        for (const auto& l : muSequence(spec_.n)) out.push_back(l.str());
        return {out, VertexMode::Label};
    }
    if (name.rfind("muprime:", 0) == 0) {
        needGln();
        std::string j = name.substr(8);
        if (!allDigits(j) || j.size() > 4) throw makeError("UnknownSequence", "muprime needs a step count");
        for (const auto& l : muPrimeSequence(spec_.n, std::stoi(j))) out.push_back(l.str());
        return {out, VertexMode::Label};
    }
    if (name == "kedem") {
        needGln();
        for (const auto& l : kedemSequence(spec_.n)) out.push_back(l.str());
        return {out, VertexMode::Id};
    }
    throw makeError("UnknownSequence", "unknown sequence '" + name + "'");
}

void Session::run(const std::vector<nlohmann::json>& refs, VertexMode mode) {
    std::size_t depth = stack_.size(), logged = events_.size();
    for (std::size_t i = 0; i < refs.size(); ++i) {
        try {
            mutate(resolveVertex(refs[i], mode));
        } catch (const Error& e) {
            stack_.resize(depth);
            seeds_.resize(depth);
            events_.erase(events_.begin() + static_cast<long>(logged), events_.end());
            throw Error(e.kind(), "step " + std::to_string(i + 1) + ": " + e.what());
        }
    }
}

const QuantumSeed& Session::currentSeed() {
    if (!hasSeed()) throw makeError("NoQuantumSeed", spec_.kind + " sessions carry no quantum seed");
    std::size_t top = stack_.size() - 1, i = top;
    while (!seeds_[i]) --i;
    for (std::size_t j = i + 1; j <= top; ++j) seeds_[j] = mutateSeed(*seeds_[j - 1], stack_[j].path.back());
    return *seeds_[top];
}

TorusElement Session::variable(std::size_t v) {
    const QuantumSeed& s = currentSeed();
    if (v >= s.size()) throw makeError("UnknownVertex", "position out of range");
    return s.vars[v];
}

std::string Session::fingerprint() const {
    const SessionState& st = state();
    std::vector<std::string> path;
    for (std::size_t v : st.path) path.push_back(stack_.front().B.indices[v]);
    nlohmann::json canon{{"spec", spec_.toJson()},
                         {"path", path},
                         {"B", st.B.B},
                         {"L", st.L ? nlohmann::json(*st.L) : nlohmann::json(nullptr)},
                         {"labels", st.B.labels}};
    return fnv1a(canon.dump());
}

std::vector<std::optional<std::string>> Session::colors() const {
    const SessionState& st = state();
    std::vector<std::optional<std::string>> out(st.B.size());
    for (std::size_t i = 0; i < st.B.size(); ++i) {
        if (st.B.frozen[i]) out[i] = "frozen";
        else if (st.framed) out[i] = isGreen(*st.framed, st.B.column(i)) ? "green" : "red";
    }
    return out;
}

nlohmann::json Session::summary() const {
    const SessionState& st = state();
    auto col = colors();
    auto vertices = nlohmann::json::array();
    for (std::size_t i = 0; i < st.B.size(); ++i)
        vertices.push_back({{"index", i},
                            {"id", st.B.indices[i]},
                            {"label", st.B.labels[i]},
                            {"frozen", static_cast<bool>(st.B.frozen[i])},
                            {"color", col[i] ? nlohmann::json(*col[i]) : nlohmann::json(nullptr)}});
    std::vector<std::string> path;
    for (std::size_t v : st.path) path.push_back(st.B.indices[v]);
    nlohmann::json j{{"spec", spec_.toJson()},
                     {"fingerprint", fingerprint()},
                     {"greenMode", spec_.greenMode},
                     {"hasSeed", hasSeed()},
                     {"vertices", vertices},
                     {"B", st.B.B},
                     {"principal", st.B.principalPart()},
                     {"L", st.L ? nlohmann::json(*st.L) : nlohmann::json(nullptr)},
                     {"path", path},
                     {"depth", st.path.size()},
                     {"eventCount", events_.size()}};
    nlohmann::json green = nullptr;
    if (st.framed) {
        bool allRed = true;
        for (std::size_t c = 0; c < st.framed->rank(); ++c) allRed = allRed && !isGreen(*st.framed, c);
        green = {{"allRed", allRed}};
        if (allRed) {
            auto sigma = coFramedBijection(*st.framed);
            green["permutation"] = sigma ? nlohmann::json(*sigma) : nlohmann::json(nullptr);
        }
    }
    j["green"] = green;
    return j;
}

nlohmann::json Session::variableJson(std::size_t v, std::size_t termCap) {
    TorusElement x = variable(v);
    const SessionState& st = state();
    return {{"vertex", v},
            {"id", st.B.indices[v]},
            {"label", st.B.labels[v]},
            {"element", toJson(x, termCap)},
            {"text", x.size() <= termCap ? nlohmann::json(x.toString()) : nlohmann::json(nullptr)},
            {"specialized", toJson(specialize(x, {}), termCap)}};
}

std::string Session::dot() const {
    const SessionState& st = state();
    DotStyle style;
    auto col = colors();
    for (std::size_t i = 0; i < col.size(); ++i)
        if (col[i] && *col[i] != "frozen") style.colors[i] = *col[i] == "green" ? "green" : "red";
    return toDot(st.B, style);
}

void Session::apply(const nlohmann::json& e) {
    if (!e.is_object() || !e.contains("op") || !e["op"].is_string()) throw makeError("ParseError", "event needs an op");
    std::string op = e["op"].get<std::string>();
    if (op == "mutate") {
        if (!e.contains("vertex")) throw makeError("ParseError", "mutate event needs a vertex");
        mutate(resolveVertex(e["vertex"], VertexMode::Id));
    } else if (op == "undo") {
        undo();
    } else if (op == "green") {
        if (!e.contains("enabled") || !e["enabled"].is_boolean()) throw makeError("ParseError", "green event needs enabled");
        setGreenMode(e["enabled"].get<bool>());
    } else {
        throw makeError("ParseError", "unknown event op '" + op + "'");
    }
}

nlohmann::json Session::snapshot() const {
    return {{"schemaVersion", kSchemaVersion},
            {"spec", initialSpec_.toJson()},
            {"events", events_},
            {"fingerprint", fingerprint()}};
}

Session Session::fromSnapshot(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("schemaVersion") || !j["schemaVersion"].is_number_integer() ||
        j["schemaVersion"].get<int>() != kSchemaVersion)
        throw makeError("SchemaVersionMismatch", "expected schemaVersion " + std::to_string(kSchemaVersion));
    if (!j.contains("spec") || !j.contains("events") || !j["events"].is_array())
        throw makeError("ParseError", "snapshot needs spec and events");
    Session s(SessionSpec::fromJson(j["spec"]));
    for (const auto& e : j["events"]) s.apply(e);
    if (j.contains("fingerprint") && j["fingerprint"] != s.fingerprint())
        throw makeError("FingerprintMismatch", "replay produced " + s.fingerprint());
    return s;
}

void persistSession(const Session& s, const std::string& path) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw makeError("IOError", "cannot write " + tmp);
        out << s.snapshot().dump(2) << '\n';
        if (!out) throw makeError("IOError", "write failed for " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw makeError("IOError", "cannot move snapshot into " + path + ": " + ec.message());
}

Session loadSession(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw makeError("IOError", "cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw makeError("ParseError", e.what());
    }
    return Session::fromSnapshot(j);
}

std::string SessionStore::create(const SessionSpec& spec) { return adopt(Session(spec)); }

std::string SessionStore::adopt(Session s) {
    std::unique_lock lock(mutex_);
    std::string id = "s" + std::to_string(next_++);
    sessions_.emplace(id, std::make_shared<Entry>(std::move(s)));
    return id;
}

std::shared_ptr<SessionStore::Entry> SessionStore::get(const std::string& id) const {
    std::shared_lock lock(mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw makeError("UnknownSession", "no session '" + id + "'");
    return it->second;
}

bool SessionStore::erase(const std::string& id) {
    std::unique_lock lock(mutex_);
    return sessions_.erase(id) > 0;
}

std::vector<std::string> SessionStore::ids() const {
    std::shared_lock lock(mutex_);
    std::vector<std::string> out;
    for (const auto& [id, e] : sessions_) out.push_back(id);
    return out;
}

}  // namespace qclust
