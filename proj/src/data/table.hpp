#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "data/schema.hpp"

namespace tabml::data {

/// A validated table of string cells. Every row has exactly schema-width
/// cells, no cell is empty, numeric cells parse as finite numbers.
struct RawTable {
    DatasetSchema schema;
    std::vector<std::vector<std::string>> rows;

    std::size_t n_rows() const { return rows.size(); }
};

/// Loads a plain comma-separated file (no quoting, UTF-8, '\n' or '\r\n'
/// line endings). The first line must be a header whose names match the
/// schema names in order; header cells are whitespace-trimmed before the
/// comparison. Rows are validated cell by cell.
RawTable load_csv(const std::string& path, const DatasetSchema& schema);

void write_csv(const RawTable& table, const std::string& path);

/// Per categorical attribute: category string -> contiguous code 0..k-1
/// assigned in lexicographic order over the observed categories.
struct EncodingMap {
    std::map<std::size_t, std::map<std::string, int>> codes;

    int code_of(std::size_t attribute, const std::string& category) const;
};

EncodingMap fit_encoding(const RawTable& table);

/// Encoded, [0,1]-normalized design matrix plus the binary label vector.
struct FeatureMatrix {
    std::size_t n = 0;
    std::size_t p = 0;
    std::vector<double> values;                          // row-major n*p
    std::vector<int> labels;                             // 0/1
    std::vector<std::pair<double, double>> column_stats; // (min,max) at normalization time
    std::vector<std::string> feature_names;
    std::string positive_class_name;

    double at(std::size_t i, std::size_t j) const { return values[i * p + j]; }
    std::span<const double> row(std::size_t i) const { return {values.data() + i * p, p}; }
    std::size_t positives() const;
};

/// Replaces categorical cells by their codes, rescales every feature column
/// by (x-min)/(max-min) (constant columns map to all-zeros) and turns the
/// target column into 0/1 labels with positive_class -> 1.
FeatureMatrix encode_and_normalize(const RawTable& table, const EncodingMap& map,
                                   const std::string& positive_class);

/// In-place min-max rescale of an n x p row-major matrix; returns the
/// per-column (min,max) captured before scaling.
std::vector<std::pair<double, double>> normalize_columns(std::vector<double>& values,
                                                         std::size_t n, std::size_t p);

/// Pearson correlation of the feature columns, row-major p*p. Symmetric,
/// unit diagonal; pairs involving a zero-variance column are 0 off-diagonal.
std::vector<double> correlation_matrix(const FeatureMatrix& m);

/// Row subset sharing column stats, names and positive class.
FeatureMatrix subset_rows(const FeatureMatrix& m, std::span<const std::size_t> indices);

} // namespace tabml::data
