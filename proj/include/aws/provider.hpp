#pragma once

#include <string>
#include <vector>

#include "aws/belief.hpp"
#include "aws/catalog.hpp"

namespace aws {

enum class RequestKind { Revise, Project, Init };

const char* to_string(RequestKind kind);

struct ProviderRequest {
    RequestKind kind = RequestKind::Revise;
    std::string hypotheses;             // serialized GlobalHypotheses record
    std::string observation;            // serialized Observation record (revise only)
    std::vector<std::string> symbols;   // candidate symbols (project / init)
    std::string target_class;
};

enum class DirectiveKind { Boost, Suppress };

struct Directive {
    std::string symbol;
    DirectiveKind kind = DirectiveKind::Boost;
};

bool operator==(const Directive& a, const Directive& b);

struct ProviderResponse {
    std::vector<AssertionEdit> edits;       // revise
    std::vector<Directive> directives;      // project
    std::vector<std::string> warnings;      // e.g. dropped unknown symbols
    std::string raw_text;                   // lines that failed the grammar
};

// Equality of the parsed content (raw_text and warnings excluded).
bool same_content(const ProviderResponse& a, const ProviderResponse& b);

// Line grammar shared by all providers:
//   BOOST <symbol>
//   SUPPRESS <symbol>
//   SUPPORT <class> <symbol> <weight>
//   REFUTE <class> <symbol> <weight>
// Keywords are case-insensitive; weights must parse as a double in [0, 1].
// Unknown symbols in directives are dropped with a warning; any other line
// that fails the grammar is ignored and preserved verbatim in raw_text.
// Total: every byte string maps to a valid (possibly empty) response.
ProviderResponse parse_grammar(const std::string& text,
                               const std::vector<std::string>& known_symbols,
                               const std::vector<std::string>& known_classes);

std::string serialize_response(const ProviderResponse& response);

class Provider {
public:
    virtual ~Provider() = default;
    // Throws ProviderUnavailable on transport-level failure; never throws for
    // unparseable content.
    virtual ProviderResponse call(const ProviderRequest& request) = 0;
    virtual std::string name() const = 0;
};

// Deterministic stand-in for a frozen language model. Pure function of
// (request, catalog, params).
class RuleProvider final : public Provider {
public:
    RuleProvider(Catalog catalog, BeliefParams params);
    ProviderResponse call(const ProviderRequest& request) override;
    std::string name() const override { return "rule"; }

private:
    ProviderResponse revise(const ProviderRequest& request) const;
    ProviderResponse project(const ProviderRequest& request) const;
    ProviderResponse init(const ProviderRequest& request) const;

    Catalog catalog_;
    BeliefParams params_;
};

struct EndpointConfig {
    std::string url;                 // http://host:port/path (TLS not supported)
    std::string token_env;           // env var holding the bearer token; may be empty
    int timeout_ms = 10000;
    int retries = 1;                 // additional attempts after the first
    int max_tokens = 256;
    double temperature = 0.0;
    std::string templates_dir;       // revise.txt / project.txt / init.txt
};

// Text-completion client. Renders the request into the per-kind prompt
// template, POSTs {prompt, max_tokens, temperature} as JSON, expects
// {text: "..."} back, and parses the completion with the line grammar.
class RemoteProvider final : public Provider {
public:
    RemoteProvider(EndpointConfig config, std::vector<std::string> known_symbols,
                   std::vector<std::string> known_classes);

    ProviderResponse call(const ProviderRequest& request) override;
    std::string name() const override { return "remote"; }

    std::string render_prompt(const ProviderRequest& request) const;
    ProviderResponse parse_completion(const std::string& text) const;

private:
    EndpointConfig config_;
    std::vector<std::string> symbols_;
    std::vector<std::string> classes_;
    std::string host_;
    int port_ = 80;
    std::string path_;
    std::string template_revise_;
    std::string template_project_;
    std::string template_init_;
};

}  // namespace aws
