#include "akshar/server.hpp"

#include <cstdio>
#include <random>

#include <httplib.h>

#include "akshar/error.hpp"
#include "akshar/operations.hpp"

namespace akshar {

using nlohmann::json;

SessionStore::SessionStore(std::chrono::seconds idle_timeout, std::function<Clock::time_point()> now)
    : idle_timeout_(idle_timeout), now_(std::move(now))
{
}

std::string SessionStore::create(std::shared_ptr<const ConversionTable> table, std::string language)
{
    static thread_local std::mt19937_64 rng{std::random_device{}()};
    expire_idle();
    std::lock_guard lock(mutex_);
    for (;;) {
        char id[33];
        std::snprintf(id, sizeof id, "%016llx%016llx", static_cast<unsigned long long>(rng()),
                      static_cast<unsigned long long>(rng()));
        if (sessions_.count(id))
            continue;
        sessions_.emplace(id, std::make_shared<Slot>(table, std::move(language), now_()));
        return id;
    }
}

std::shared_ptr<SessionStore::Slot> SessionStore::find(const std::string& id)
{
    std::lock_guard lock(mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end())
        throw Error(ErrorKind::UnknownSession, "no session '" + id + "'");
    if (now_() - it->second->last_used.load() > idle_timeout_) {
        sessions_.erase(it);
        throw Error(ErrorKind::UnknownSession, "session '" + id + "' expired");
    }
    return it->second;
}

bool SessionStore::erase(const std::string& id)
{
    std::lock_guard lock(mutex_);
    return sessions_.erase(id) > 0;
}

std::size_t SessionStore::expire_idle()
{
    std::lock_guard lock(mutex_);
    auto now = now_();
    return std::erase_if(sessions_, [&](const auto& kv) {
        return now - kv.second->last_used.load() > idle_timeout_;
    });
}

std::size_t SessionStore::size() const
{
    std::lock_guard lock(mutex_);
    return sessions_.size();
}

namespace {

int status_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::UnknownSession: return 404;
    case ErrorKind::BadRequest: return 400;
    default: return 422;
    }
}

void send_json(httplib::Response& res, const json& body, int status = 200)
{
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

template <class F>
httplib::Server::Handler guarded(F f)
{
    return [f = std::move(f)](const httplib::Request& req, httplib::Response& res) {
        try {
            f(req, res);
        } catch (const Error& e) {
            send_json(res, ops::to_json(e), status_for(e.kind()));
        } catch (const json::exception& e) {
            send_json(res, {{"error", "BadRequest"}, {"message", e.what()}}, 400);
        }
    };
}

json parse_body(const httplib::Request& req)
{
    if (req.body.empty())
        return json::object();
    auto body = json::parse(req.body, nullptr, false);
    if (body.is_discarded() || !body.is_object())
        throw Error(ErrorKind::BadRequest, "body must be a JSON object");
    return body;
}

template <class T>
T required(const json& body, const char* key)
{
    if (!body.contains(key))
        throw Error(ErrorKind::BadRequest, std::string("missing field '") + key + "'");
    try {
        return body.at(key).get<T>();
    } catch (const json::exception&) {
        throw Error(ErrorKind::BadRequest, std::string("field '") + key + "' has the wrong type");
    }
}

template <class T>
T optional_field(const json& body, const char* key, T fallback)
{
    return body.contains(key) ? required<T>(body, key) : fallback;
}

std::size_t index_field(const json& body)
{
    if (!body.contains("index") || !body.at("index").is_number_integer())
        throw Error(ErrorKind::BadRequest, "field 'index' must be an integer");
    auto i = body.at("index").get<long long>();
    if (i < 0)
        throw Error(ErrorKind::IndexOutOfRange, "negative candidate index");
    return static_cast<std::size_t>(i);
}

bool flag_param(const httplib::Request& req, const char* name)
{
    if (!req.has_param(name))
        return false;
    auto v = req.get_param_value(name);
    return v == "1" || v == "true";
}

}  // namespace

void install_routes(httplib::Server& server, const ResourceRegistry& registry, SessionStore& sessions)
{
    const auto& reg = registry;
    auto state = [](const std::string& id, const ImeSession& s, const std::string& language) {
        auto j = ops::to_json(s);
        j["id"] = id;
        j["language"] = language;
        return j;
    };
    // Applies fn to the session named in the path and replies with its state.
    auto session_route = [&sessions, state](auto fn) {
        return guarded([&sessions, state, fn](const httplib::Request& req, httplib::Response& res) {
            std::string id = req.matches[1];
            auto body = parse_body(req);
            send_json(res, sessions.with_session(id, [&](ImeSession& s, const std::string& language) {
                fn(s, body);
                return state(id, s, language);
            }));
        });
    };

    server.Post("/ime/session", guarded([&reg, &sessions, state](const httplib::Request& req,
                                                                  httplib::Response& res) {
        auto body = parse_body(req);
        auto language = required<std::string>(body, "language");
        auto id = sessions.create(reg.ime(language), language);
        send_json(res, sessions.with_session(id, [&](ImeSession& s, const std::string& l) {
            return state(id, s, l);
        }), 201);
    }));
    server.Get(R"(/ime/([0-9a-f]+))", session_route([](ImeSession&, const json&) {}));
    server.Delete(R"(/ime/([0-9a-f]+))", guarded([&sessions](const httplib::Request& req,
                                                             httplib::Response& res) {
        if (!sessions.erase(req.matches[1]))
            throw Error(ErrorKind::UnknownSession, "no session '" + std::string(req.matches[1]) + "'");
        res.status = 204;
    }));
    server.Post(R"(/ime/([0-9a-f]+)/key)", session_route([](ImeSession& s, const json& body) {
        auto key = required<std::string>(body, "key");
        if (key.size() != 1)
            throw Error(ErrorKind::BadRequest, "field 'key' must be one character");
        s.feed_key(key[0]);
    }));
    server.Post(R"(/ime/([0-9a-f]+)/select)", session_route([](ImeSession& s, const json& body) {
        s.select(index_field(body));
    }));
    server.Post(R"(/ime/([0-9a-f]+)/backspace)",
                session_route([](ImeSession& s, const json&) { s.backspace(); }));
    server.Post(R"(/ime/([0-9a-f]+)/commit_raw)",
                session_route([](ImeSession& s, const json&) { s.commit_raw(); }));

    server.Post("/render", guarded([&reg](const httplib::Request& req, httplib::Response& res) {
        auto body = parse_body(req);
        auto text = required<std::string>(body, "text");
        auto size = parse_glyph_size(optional_field<int>(body, "size", 16));
        auto rules = optional_field<std::string>(body, "rules", std::string(ops::kDefaultRules));
        res.set_content(ops::render(reg, text, size, rules), "image/x-portable-bitmap");
    }));
    server.Post("/gloss", guarded([&reg](const httplib::Request& req, httplib::Response& res) {
        auto body = parse_body(req);
        auto pair = required<std::string>(body, "pair");
        auto sentence = required<std::string>(body, "sentence");
        send_json(res, {{"pair", pair}, {"gloss", ops::gloss(reg, pair, sentence)}});
    }));
    server.Post("/translit", guarded([&reg](const httplib::Request& req, httplib::Response& res) {
        auto body = parse_body(req);
        auto text = ops::translit(
            reg, required<std::string>(body, "text"), optional_field<std::string>(body, "from", ""),
            required<std::string>(body, "to"),
            parse_fallback(optional_field<std::string>(body, "fallback", "strict")),
            optional_field<std::string>(body, "table", std::string(ops::kDefaultTable)));
        send_json(res, {{"text", text}});
    }));
    server.Post("/encode", guarded([&reg](const httplib::Request& req, httplib::Response& res) {
        auto body = parse_body(req);
        auto bytes = ops::encode(reg, required<std::string>(body, "text"),
                                 optional_field<std::string>(body, "table", std::string(ops::kDefaultTable)),
                                 optional_field<bool>(body, "interchange", false));
        res.set_content(std::string(bytes.begin(), bytes.end()), "application/octet-stream");
    }));
    server.Post("/decode", guarded([&reg](const httplib::Request& req, httplib::Response& res) {
        std::string table = req.has_param("table") ? req.get_param_value("table")
                                                   : std::string(ops::kDefaultTable);
        std::span bytes(reinterpret_cast<const std::uint8_t*>(req.body.data()), req.body.size());
        send_json(res, {{"text", ops::decode(reg, bytes, table, flag_param(req, "interchange"),
                                             flag_param(req, "lossy"))}});
    }));
    server.Post("/coverage", guarded([&reg](const httplib::Request& req, httplib::Response& res) {
        auto body = parse_body(req);
        send_json(res, ops::to_json(ops::coverage(
                           reg, required<std::string>(body, "text"),
                           optional_field<std::string>(body, "table", std::string(ops::kDefaultTable)))));
    }));
    server.Get("/resources", guarded([&reg](const httplib::Request&, httplib::Response& res) {
        send_json(res, ops::to_json(reg));
    }));

    server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
        if (res.body.empty() && res.status == 404)
            send_json(res, {{"error", "NotFound"}, {"message", "no such endpoint"}}, 404);
    });
}

bool serve(const ResourceRegistry& registry, const ServerConfig& config)
{
    httplib::Server server;
    SessionStore sessions(config.idle_timeout);
    install_routes(server, registry, sessions);
    return server.listen(config.host, config.port);
}

}  // namespace akshar
