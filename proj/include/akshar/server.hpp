#pragma once

// HTTP front end. Routes are thin wrappers over akshar::ops and ImeSession;
// the request and response bodies are documented in docs/api.md.

#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>

#include "akshar/ime.hpp"
#include "akshar/registry.hpp"

namespace httplib {
class Server;
}

namespace akshar {

class SessionStore {
public:
    using Clock = std::chrono::steady_clock;

    explicit SessionStore(std::chrono::seconds idle_timeout = std::chrono::minutes(30),
                          std::function<Clock::time_point()> now = Clock::now);

    std::string create(std::shared_ptr<const ConversionTable> table, std::string language);

    // Runs fn(session, language) holding that session's lock. Throws
    // UnknownSession for ids that never existed or have expired.
    template <class F>
    auto with_session(const std::string& id, F&& fn)
    {
        auto slot = find(id);
        std::lock_guard lock(slot->mutex);
        slot->last_used = now_();
        return fn(slot->session, std::as_const(slot->language));
    }

    bool erase(const std::string& id);
    std::size_t expire_idle();
    std::size_t size() const;

private:
    struct Slot {
        Slot(std::shared_ptr<const ConversionTable> t, std::string l, Clock::time_point when)
            : session(std::move(t)), language(std::move(l)), last_used(when)
        {
        }
        std::mutex mutex;
        ImeSession session;
        std::string language;
        std::atomic<Clock::time_point> last_used;
    };

    std::shared_ptr<Slot> find(const std::string& id);

    std::chrono::seconds idle_timeout_;
    std::function<Clock::time_point()> now_;
    mutable std::mutex mutex_;
    std::unordered_map<std::string, std::shared_ptr<Slot>> sessions_;
};

struct ServerConfig {
    std::string host = "127.0.0.1";
    int port = 8080;
    std::chrono::seconds idle_timeout = std::chrono::minutes(30);
};

void install_routes(httplib::Server& server, const ResourceRegistry& registry, SessionStore& sessions);

// Blocks until the server stops. Returns false if the port cannot be bound.
bool serve(const ResourceRegistry& registry, const ServerConfig& config);

}  // namespace akshar
