#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tabml::data {

enum class AttributeKind { Categorical, Integer, Continuous };
enum class AttributeRole { Feature, Target };

/// One column of a dataset: name, value kind, and whether it is a feature or
/// the prediction target. Categorical attributes may declare a closed list of
/// admissible categories; when absent, categories are learned from data.
/// Numeric attributes may carry a value range, used only by the synthesizer.
struct AttributeSpec {
    std::string name;
    AttributeKind kind = AttributeKind::Categorical;
    AttributeRole role = AttributeRole::Feature;
    std::optional<std::vector<std::string>> categories;
    std::optional<std::pair<double, double>> numeric_range;

    bool is_categorical() const { return kind == AttributeKind::Categorical; }
    bool is_numeric() const { return !is_categorical(); }
};

struct DatasetSchema {
    std::vector<AttributeSpec> attributes;

    std::size_t width() const { return attributes.size(); }
    std::size_t target_index() const;
    const AttributeSpec& target() const { return attributes[target_index()]; }
    std::vector<std::size_t> feature_indexes() const;

    /// Throws Error(InvalidConfig) on any structural violation: not exactly
    /// one target, duplicate names, or a declared category list with fewer
    /// than two distinct entries.
    void validate() const;
};

const char* kind_name(AttributeKind kind);
const char* role_name(AttributeRole role);

// Plain-text schema format, one attribute per line:
//   <name> | <kind> | <role> [| categories=a;b;c] [| range=lo..hi]
// '#' starts a comment. See data/seer_breast_cancer.schema for an example.
DatasetSchema parse_schema(const std::string& text);
DatasetSchema load_schema(const std::string& path);
std::string format_schema(const DatasetSchema& schema);

/// The 16-attribute breast-cancer survival cohort schema bundled with the
/// toolkit (target "Status" with classes Alive/Dead). Matches the schema file
/// shipped under data/.
DatasetSchema breast_cancer_schema();

} // namespace tabml::data
