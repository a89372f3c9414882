#include "eraser/remote.hpp"

#include <chrono>
#include <cmath>

#include <httplib.h>

#include "eraser/error.hpp"
#include "eraser/json_util.hpp"

namespace eraser {

namespace {

json post_task(const EndpointConfig& cfg, const json& body) {
    httplib::Client client(cfg.url);
    auto timeout_ms = std::chrono::milliseconds(
        static_cast<long long>(std::llround(cfg.timeout_secs * 1000.0)));
    client.set_connection_timeout(timeout_ms);
    client.set_read_timeout(timeout_ms);
    client.set_write_timeout(timeout_ms);

    const std::string payload = body.dump();
    httplib::Result res = client.Post("/", payload, "application/json");
    if (!res) {
        // transport error: retry once, then give up
        res = client.Post("/", payload, "application/json");
    }
    if (!res) {
        throw RemoteFailureError("transport error talking to " + cfg.url + ": " +
                                 httplib::to_string(res.error()));
    }
    if (res->status != 200) {
        throw RemoteFailureError("endpoint " + cfg.url + " replied with status " +
                                 std::to_string(res->status));
    }
    try {
        return json::parse(res->body);
    } catch (const json::parse_error& e) {
        throw MalformedResponseError("endpoint " + cfg.url + " returned invalid JSON: " +
                                     e.what());
    }
}

class RemoteRewriter final : public Rewriter {
public:
    explicit RemoteRewriter(EndpointConfig cfg) : client_(std::move(cfg)) {}

    RewriteResult rewrite(const RewriteRequest& req) override {
        std::string text = client_.rewrite(req.doc.text, req.private_triples,
                                           req.public_triples, render_prompt(req));
        return {req.doc.doc_id, std::move(text), 0.0, id()};
    }

    std::string id() const override { return "remote"; }

private:
    RemoteClient client_;
};

class RemoteExtractor final : public TripleExtractor {
public:
    explicit RemoteExtractor(EndpointConfig cfg) : client_(std::move(cfg)) {}

    TripleSet extract(const std::string&, const std::string& text) override {
        return client_.extract(text);
    }

    std::string id() const override { return "remote"; }

private:
    RemoteClient client_;
};

class RemoteGenerator final : public Generator {
public:
    explicit RemoteGenerator(EndpointConfig cfg) : client_(std::move(cfg)) {}

    std::string generate(const std::string& question,
                         const std::vector<std::string>& docs) override {
        return client_.generate(render_qa_prompt(question, docs));
    }

    std::string id() const override { return "remote"; }

private:
    RemoteClient client_;
};

}  // namespace

RemoteClient::RemoteClient(EndpointConfig cfg) : cfg_(std::move(cfg)) {}

std::string RemoteClient::rewrite(const std::string& text, const TripleSet& private_triples,
                                  const TripleSet& public_triples, const std::string& prompt) {
    json body{{"task", "rewrite"},
              {"text", text},
              {"private", triples_to_json(private_triples)},
              {"public", triples_to_json(public_triples)},
              {"prompt", prompt}};
    json reply = post_task(cfg_, body);
    if (!reply.contains("text") || !reply.at("text").is_string()) {
        throw MalformedResponseError("rewrite reply lacks a string 'text' field");
    }
    return reply.at("text").get<std::string>();
}

TripleSet RemoteClient::extract(const std::string& text) {
    json body{{"task", "extract"}, {"text", text}};
    json reply = post_task(cfg_, body);
    if (!reply.contains("triples") || !reply.at("triples").is_array()) {
        throw MalformedResponseError("extract reply lacks a 'triples' array");
    }
    try {
        return triples_from_json(reply.at("triples"));
    } catch (const Error& e) {
        throw MalformedResponseError(std::string("extract reply: ") + e.what());
    }
}

std::string RemoteClient::generate(const std::string& prompt) {
    json body{{"task", "generate"}, {"prompt", prompt}};
    json reply = post_task(cfg_, body);
    if (!reply.contains("text") || !reply.at("text").is_string()) {
        throw MalformedResponseError("generate reply lacks a string 'text' field");
    }
    return reply.at("text").get<std::string>();
}

std::unique_ptr<Rewriter> make_remote_rewriter(EndpointConfig cfg) {
    return std::make_unique<RemoteRewriter>(std::move(cfg));
}

std::unique_ptr<TripleExtractor> make_remote_extractor(EndpointConfig cfg) {
    return std::make_unique<RemoteExtractor>(std::move(cfg));
}

std::unique_ptr<Generator> make_remote_generator(EndpointConfig cfg) {
    return std::make_unique<RemoteGenerator>(std::move(cfg));
}

}  // namespace eraser
