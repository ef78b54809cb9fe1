#pragma once

#include <map>
#include <string>
#include <vector>

namespace aws {

// A latent environment type: per-class placement distributions over the
// location symbols plus the probability that a miss comes back with a
// co-occurrence hint. Placement rows are aligned with Catalog::symbols.
struct LatentType {
    int id = 0;
    std::string name;
    std::map<std::string, std::vector<double>> placement;  // class -> per-symbol probs
    double hint_strength = 0.0;
};

struct Catalog {
    std::vector<std::string> symbols;
    std::vector<std::string> classes;
    std::vector<double> prior;  // over types, sums to 1
    std::vector<LatentType> types;

    int symbol_index(const std::string& symbol) const;
    int class_index(const std::string& object_class) const;

    double placement(std::size_t type_idx, const std::string& object_class,
                     std::size_t symbol_idx) const;

    // Prior-weighted placement row for one object class.
    std::vector<double> mixture_placement(const std::string& object_class) const;

    // Structural checks: sizes line up, rows and prior normalized, names are
    // identifier-like. Throws ConfigError listing every violation.
    void validate() const;

    // Additional requirement on shipped catalogs: at least two types with
    // pairwise distinct placement maps.
    void validate_diversity() const;
};

Catalog parse_catalog(const std::string& json_text);
Catalog load_catalog(const std::string& path);  // validate() + validate_diversity()
std::string catalog_to_json(const Catalog& catalog);

}  // namespace aws
