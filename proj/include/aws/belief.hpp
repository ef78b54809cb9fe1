#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aws/catalog.hpp"
#include "aws/worldgen.hpp"

namespace aws {

class Provider;  // provider.hpp

// ---------------------------------------------------------------------------
// Hyperparameters of the heuristic update/projection pipeline. The exact
// Bayesian path only uses floor_eps.
// ---------------------------------------------------------------------------
struct BeliefParams {
    double floor_eps = 1e-4;        // minimum retained probability per symbol
    double beta_boost = 1.0;        // similarity projection, supports polarity
    double beta_supp = 0.8;         // similarity projection, refutes polarity
    double kappa_boost = 2.0;       // provider projection boost multiplier
    double kappa_supp = 0.5;        // provider projection suppress multiplier
    double delta_down = 0.5;        // down-weight factor for contradicted supports
    double removal_threshold = 0.05;  // assertions below this weight are dropped
    double refute_weight = 0.9;     // weight of the refutes assertion added on a miss

    void validate() const;  // throws ConfigError listing violations
};

// ---------------------------------------------------------------------------
// Global hypotheses: structured, machine-checkable assertions with weights.
// ---------------------------------------------------------------------------
enum class Polarity { Supports, Refutes };

const char* to_string(Polarity p);

struct Assertion {
    std::string object_class;
    std::string symbol;
    Polarity polarity = Polarity::Supports;
    double weight = 1.0;  // (0, 1]
    std::string provenance;
};

// An absolute-weight upsert; weight below the removal threshold removes the
// (class, symbol, polarity) assertion. This single shape covers add, remove
// and reweight, and is exactly what the provider grammar can express.
struct AssertionEdit {
    Polarity polarity = Polarity::Supports;
    std::string object_class;
    std::string symbol;
    double weight = 0.0;
};

bool operator==(const AssertionEdit& a, const AssertionEdit& b);

class GlobalHypotheses {
public:
    // Keeps at most one assertion per (class, symbol, polarity), stored in
    // canonical sorted order so serialization is insertion-order independent.
    void set(Assertion assertion);
    void remove(const std::string& object_class, const std::string& symbol, Polarity p);
    void clear() { items_.clear(); }

    const Assertion* find(const std::string& object_class, const std::string& symbol,
                          Polarity p) const;
    const std::vector<Assertion>& assertions() const { return items_; }
    bool empty() const { return items_.empty(); }
    std::size_t size() const { return items_.size(); }

    // Line-oriented record: "supports <class> <symbol> <weight> <provenance>".
    std::string to_record() const;
    static GlobalHypotheses from_record(const std::string& record);

private:
    std::vector<Assertion> items_;
};

GlobalHypotheses apply_edits(GlobalHypotheses h, std::span<const AssertionEdit> edits,
                             double removal_threshold, const std::string& provenance);

// ---------------------------------------------------------------------------
// ActionBelief: a point on the simplex over candidate symbols, with an
// epsilon floor so heuristic updates stay revisable. Symbols are kept in
// lexicographic order, which makes every computation (and every argmax
// tie-break) independent of insertion order.
// ---------------------------------------------------------------------------
class ActionBelief {
public:
    static ActionBelief uniform(std::vector<std::string> symbols, double floor_eps);
    // Normalizes and floors arbitrary nonnegative weights.
    static ActionBelief from_weights(std::vector<std::pair<std::string, double>> weights,
                                     double floor_eps);

    double at(const std::string& symbol) const;  // throws BeliefError if absent
    bool contains(const std::string& symbol) const;
    const std::vector<std::string>& symbols() const { return symbols_; }
    const std::vector<double>& probs() const { return probs_; }
    double floor_eps() const { return floor_; }
    std::size_t size() const { return symbols_.size(); }

    // Lexicographically smallest among maxima.
    std::string argmax() const;

    // Returns a new belief with each symbol's mass multiplied by
    // multiplier(symbol), then floored and renormalized.
    ActionBelief scaled(const std::vector<double>& multipliers) const;

    // "symbol:prob symbol:prob ..." with %.17g probabilities (exact round-trip).
    std::string to_record() const;
    // Restores a serialized snapshot bit-for-bit; validates normalization.
    static ActionBelief from_record(const std::string& record, double floor_eps);

private:
    ActionBelief() = default;
    std::vector<std::string> symbols_;
    std::vector<double> probs_;
    double floor_ = 0.0;
};

// Shannon entropy in nats; zero entries contribute zero.
double entropy(std::span<const double> probs);
double entropy(const ActionBelief& belief);

// Waterfilling floor: entries below eps are pinned to exactly eps and the
// rest renormalized to 1 - k*eps, iterated to a fixed point. eps = 0 is a
// plain normalization. Throws BeliefError on nonpositive total mass or when
// n*eps >= 1.
void floor_normalize(std::vector<double>& probs, double eps);

// Token-level Jaccard similarity over lowercased [a-z0-9]+ tokens.
double symbol_similarity(const std::string& a, const std::string& b);

// ---------------------------------------------------------------------------
// Exact joint posterior over (latent type, target symbol, target instance).
// The reference updater: everything here is plain Bayes with the worldgen
// observation likelihood. Zeroing happens pre-floor; the floor is applied
// only when exporting an ActionBelief.
// ---------------------------------------------------------------------------
struct ObsBranch {
    ObsKind kind = ObsKind::Empty;
    std::string hint_symbol;  // EmptyWithHint only
    double hint_confidence = 0.0;
    double prob = 0.0;
};

// Hint side of the simulated observation model: probability that a miss
// carries a hint, and the distribution of the hinted symbol.
struct HintModel {
    double p_hint = 0.0;
    // (symbol, branch probability given a hint, stated confidence)
    struct Entry {
        std::string symbol;
        double prob = 0.0;
        double confidence = 0.0;
    };
    std::vector<Entry> entries;
};

HintModel prior_hint_model(const Catalog& catalog, const std::string& target_class);

class ExactPosterior {
public:
    // Generative prior: type from the catalog prior, symbol from the type's
    // placement row for the target class, instance uniform within the symbol.
    ExactPosterior(const World& world, const Catalog& catalog);

    std::size_t num_types() const { return hint_strength_.size(); }
    const std::vector<std::string>& symbols() const { return symbols_; }
    int instance_count(std::size_t symbol_idx) const { return counts_[symbol_idx]; }
    double joint(std::size_t type_idx, std::size_t symbol_idx, std::size_t inst_idx) const;

    std::vector<double> symbol_marginal() const;  // raw, pre-floor
    std::vector<double> type_marginal() const;
    ActionBelief action_belief(double floor_eps) const;

    // Instance-granular Bayes update with a real observation. Throws
    // InconsistentObservation when the observation has zero likelihood.
    ExactPosterior updated(const Observation& obs) const;

    // Symbol-granular planning-side conditionals. `branches` enumerates all
    // positive-probability simulated outcomes of checking a symbol, with
    // probabilities computed from this joint (so they sum to 1 exactly and
    // expected information gain is nonnegative). `conditioned` returns the
    // posterior given one such branch.
    std::vector<ObsBranch> branches(const std::string& symbol) const;
    ExactPosterior conditioned(const std::string& symbol, const ObsBranch& branch) const;

    // Hint model conditioned on the target not being at `symbol`.
    HintModel conditional_hint_model(const std::string& symbol) const;

    double prob_target_at(const std::string& symbol) const;

private:
    ExactPosterior() = default;
    int symbol_idx(const std::string& symbol) const;  // throws BeliefError
    void renormalize(const char* context);

    std::vector<std::string> symbols_;
    std::vector<int> counts_;
    std::vector<int> offsets_;
    std::vector<std::string> instance_ids_;            // global instance order
    std::vector<double> hint_strength_;                // per type
    std::vector<double> place_;                        // [type][symbol], target-class row
    std::vector<double> joint_;                        // [type][global instance]
    std::string target_class_;
};

ExactPosterior exact_update(const ExactPosterior& posterior, const Observation& obs);
ActionBelief marginal_action_belief(const ExactPosterior& posterior, double floor_eps);

// ---------------------------------------------------------------------------
// Initialization and the two-stage heuristic update.
// ---------------------------------------------------------------------------
enum class InitMode { Informed, Flat };

std::pair<GlobalHypotheses, ActionBelief> init_belief(const SearchTask& task,
                                                      const Catalog& catalog,
                                                      InitMode mode,
                                                      const BeliefParams& params);

// Deterministic revision rules (first stage of the two-stage update):
//   Empty at s:         down-weight supports(target, s) by delta_down
//                       (dropping below removal_threshold removes) and add
//                       refutes(target, s, refute_weight).
//   EmptyWithHint(Y):   Empty rules plus supports(target, Y, hint confidence).
//   Found at s:         replace everything with supports(target, s, 1.0).
// Expressed as absolute-weight edits so a provider can restate them verbatim.
std::vector<AssertionEdit> rule_edits(const GlobalHypotheses& h,
                                      const std::string& target_class,
                                      const Observation& obs,
                                      const BeliefParams& params);

struct RevisionOutcome {
    GlobalHypotheses hypotheses;
    bool provider_called = false;
    bool provider_ok = true;
    std::vector<std::string> notes;
};

// Applies the deterministic rule edits, then any provider edits on top.
// Provider failure falls back to rule edits only and is recorded in notes.
// The provider request carries the pre-revision hypotheses so a rule-based
// provider restates exactly the built-in edits (idempotent upserts).
RevisionOutcome revise_hypotheses(const GlobalHypotheses& h, const std::string& target_class,
                                  const Observation& obs, Provider* provider,
                                  const BeliefParams& params, int step);

// Second stage, similarity variant: per-symbol multiplier
//   m(s) = prod over assertions a of (1 + pol(a) * weight(a) * sim(s, a.symbol))
// with pol = +beta_boost for supports and -beta_supp for refutes, clamped to
// [0.05, 20]. Identity when there are no assertions.
ActionBelief project_similarity(const GlobalHypotheses& h, const ActionBelief& belief,
                                const BeliefParams& params);

struct ProjectionOutcome {
    ActionBelief belief;
    bool provider_called = false;
    bool provider_ok = true;
    std::vector<std::string> notes;
};

// Second stage, provider variant: boost/suppress directives compose
// multiplicatively (kappa_boost / kappa_supp); unknown symbols are dropped
// with a recorded warning; provider failure returns the input unchanged.
ProjectionOutcome project_provider(const GlobalHypotheses& h, const ActionBelief& belief,
                                   Provider& provider, const std::string& target_class,
                                   const BeliefParams& params);

}  // namespace aws
