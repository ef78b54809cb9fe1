#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aws/catalog.hpp"
#include "aws/rng.hpp"

namespace aws {

struct GenerationConfig {
    int min_instances = 1;
    int max_instances = 4;
    int max_total_instances = 24;
    std::optional<std::string> target_class;  // unset: drawn uniformly
    void validate() const;
};

struct SymbolInstances {
    std::string symbol;
    std::vector<std::string> instances;
};

// A sampled static world. Immutable after construction; the target fields
// are ground truth hidden from the agent.
struct World {
    std::uint64_t seed = 0;
    int latent_id = 0;
    std::vector<SymbolInstances> locations;  // catalog symbol order
    std::string target_class;
    std::string target_symbol;
    std::string target_instance;
    std::map<std::string, std::vector<std::string>> distractors;  // instance -> classes

    int total_instances() const;
    const SymbolInstances* find_symbol(const std::string& symbol) const;
    bool has_instance(const std::string& symbol, const std::string& instance) const;
    std::vector<std::string> symbol_names() const;
};

struct SearchTask {
    World world;
    std::vector<std::string> candidate_symbols;  // exactly the world's symbols
    int budget = 1;
    double discount = 1.0;  // stored for completeness; the episodic objective is sparse
    void validate() const;
};

enum class ObsKind { Found, Empty, EmptyWithHint };

const char* to_string(ObsKind kind);
ObsKind obs_kind_from_string(const std::string& s);

struct HintAssertion {
    std::string object_class;
    std::string symbol;
    double confidence = 0.0;
};

struct Observation {
    ObsKind kind = ObsKind::Empty;
    std::string symbol;
    std::string instance;
    std::optional<HintAssertion> hint;  // present only for EmptyWithHint
};

// Compact single-line record, e.g. "empty cabinet cabinet2" or
// "empty_with_hint sink sink1 hint mug drawer 0.42".
std::string obs_to_record(const Observation& obs);
Observation obs_from_record(const std::string& record);

// Deterministic in (catalog, config, seed). Draws the latent type from the
// catalog prior, instance counts per symbol, the hidden target placement,
// and distractor placements, all from the "world" stream of `seed`.
World sample_world(const Catalog& catalog, const GenerationConfig& config,
                   std::uint64_t seed);

SearchTask make_task(World world, int budget, double discount = 1.0);

struct StepResult {
    Observation obs;
    int reward = 0;
    bool done = false;
};

// Per-episode mutable environment state: step counter, finished flag and the
// private hint stream. The task and catalog are shared and never mutated.
class Episode {
public:
    Episode(const SearchTask& task, const Catalog& catalog, std::uint64_t hint_seed);

    // Check one grounded instance. Reward 1 and done iff the target is there;
    // done also once the budget is exhausted. Hints are truthful draws from
    // the true latent's placement row for the target class.
    StepResult step(const std::string& symbol, const std::string& instance);

    int steps_taken() const { return steps_; }
    bool finished() const { return finished_; }

private:
    const SearchTask* task_;
    const LatentType* latent_;
    Rng hint_rng_;
    int steps_ = 0;
    bool finished_ = false;
};

}  // namespace aws
