#pragma once

#include <memory>
#include <string>
#include <vector>

#include "eraser/extractor.hpp"
#include "eraser/rewriter.hpp"

namespace eraser {

struct EndpointConfig {
    std::string url;            // e.g. http://127.0.0.1:8089
    double timeout_secs = 30.0;
    int parallelism = 4;        // bound on in-flight requests, enforced by the caller
};

// One JSON-over-HTTP protocol serves rewriters, extractors and answer
// generators: POST {"task": ..., "text": ..., "private": [...], "public":
// [...], "prompt": ...} to the endpoint root; the reply carries {"text":
// ...} or {"triples": [...]}. Non-200 is a RemoteFailureError; transport
// errors are retried once, HTTP statuses never.
class RemoteClient {
public:
    explicit RemoteClient(EndpointConfig cfg);

    std::string rewrite(const std::string& text, const TripleSet& private_triples,
                        const TripleSet& public_triples, const std::string& prompt);
    TripleSet extract(const std::string& text);
    std::string generate(const std::string& prompt);

    const EndpointConfig& config() const { return cfg_; }

private:
    std::string post_for_text(const std::string& body);
    EndpointConfig cfg_;
};

std::unique_ptr<Rewriter> make_remote_rewriter(EndpointConfig cfg);
std::unique_ptr<TripleExtractor> make_remote_extractor(EndpointConfig cfg);

// Answer generation interface used by the downstream QA stage.
class Generator {
public:
    virtual ~Generator() = default;
    virtual std::string generate(const std::string& question,
                                 const std::vector<std::string>& docs) = 0;
    virtual std::string id() const = 0;
};

std::unique_ptr<Generator> make_remote_generator(EndpointConfig cfg);

}  // namespace eraser
