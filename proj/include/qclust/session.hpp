#pragma once

#include "qclust/exchange.hpp"
#include "qclust/gls.hpp"
#include "qclust/glnsatake.hpp"
#include "qclust/green.hpp"
#include "qclust/qseed.hpp"

#include "json.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace qclust {

constexpr int kSchemaVersion = 1;

// What a session starts from. kind is gln, gls or conj.
struct SessionSpec {
    std::string kind;
    int n = 0;                // gln
    std::string cartanName;   // gls, conj: a name or empty when given as a matrix
    IntMatrix cartan;         // gls, conj
    ReducedWord word;         // gls
    bool greenMode = false;

    nlohmann::json toJson() const;
    // Throws MalformedSpec.
    static SessionSpec fromJson(const nlohmann::json& j);
};

// "A1^(1)" or "affineA1", "A<r>", or a JSON matrix literal.
IntMatrix parseCartan(const std::string& text);
// "0101", "0,1,0,1" or a JSON array.
ReducedWord parseWord(const std::string& text);

struct SessionState {
    ExchangeData B;
    std::optional<IntMatrix> L;
    std::vector<std::optional<Label>> labels;  // gln only
    std::optional<FramedQuiver> framed;        // when the principal part is skew-symmetric
    std::vector<std::size_t> path;             // effective mutations since the initial seed
};

enum class VertexMode { Auto, Id, Label };

class Session {
public:
    explicit Session(SessionSpec spec);

    const SessionSpec& spec() const { return spec_; }
    const SessionState& state() const { return stack_.back(); }
    const nlohmann::json& events() const { return events_; }
    bool hasSeed() const { return seeds_.front().has_value(); }

    // Integers are positions; strings match a current label, then a stable id, then a position.
    std::size_t resolveVertex(const nlohmann::json& ref, VertexMode mode = VertexMode::Auto) const;

    // Throws FrozenMutation, or RedVertexMutation in green mode.
    void mutate(std::size_t v);
    void undo();  // NothingToUndo on the initial seed
    void setGreenMode(bool on);

    // mu, muprime:J, kedem; anything else is UnknownSequence.
    std::pair<std::vector<std::string>, VertexMode> preset(const std::string& name) const;
    // Resolves each reference against the state at the moment it is applied.
    void run(const std::vector<nlohmann::json>& refs, VertexMode mode = VertexMode::Auto);

    // Computed on demand from the nearest cached seed.
    TorusElement variable(std::size_t v);
    const QuantumSeed& currentSeed();

    std::string fingerprint() const;
    nlohmann::json summary() const;
    nlohmann::json variableJson(std::size_t v, std::size_t termCap);
    std::string dot() const;

    // Spec and event log only; caches are rebuilt by replay.
    nlohmann::json snapshot() const;
    static Session fromSnapshot(const nlohmann::json& j);

private:
    void apply(const nlohmann::json& event);
    std::vector<std::optional<std::string>> colors() const;

    SessionSpec spec_;
    SessionSpec initialSpec_;  // replay starts here; spec_ tracks green-mode toggles
    std::vector<SessionState> stack_;
    std::vector<std::optional<QuantumSeed>> seeds_;  // seeds_[i] belongs to stack_[i]
    nlohmann::json events_ = nlohmann::json::array();
};

void persistSession(const Session& s, const std::string& path);
// Throws IOError, ParseError, SchemaVersionMismatch or FingerprintMismatch; never returns partial state.
Session loadSession(const std::string& path);

// In-memory sessions, one writer at a time per session.
class SessionStore {
public:
    struct Entry {
        std::mutex mutex;
        Session session;
        explicit Entry(Session s) : session(std::move(s)) {}
    };

    std::string create(const SessionSpec& spec);
    std::string adopt(Session s);
    std::shared_ptr<Entry> get(const std::string& id) const;  // UnknownSession
    bool erase(const std::string& id);
    std::vector<std::string> ids() const;

private:
    mutable std::shared_mutex mutex_;
    std::map<std::string, std::shared_ptr<Entry>> sessions_;
    std::size_t next_ = 1;
};

}  // namespace qclust
