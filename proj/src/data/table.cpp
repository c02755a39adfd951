#include "data/table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "error.hpp"

namespace tabml::data {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    for (const char c : line) {
        if (c == ',') {
            cells.push_back(cell);
            cell.clear();
        } else {
            cell.push_back(c);
        }
    }
    cells.push_back(cell);
    return cells;
}

bool parse_finite(const std::string& text, double& out) {
    const std::string t = trim(text);
    if (t.empty()) return false;
    const auto* first = t.data();
    const auto* last = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last && std::isfinite(out);
}

} // namespace

RawTable load_csv(const std::string& path, const DatasetSchema& schema) {
    schema.validate();
    std::ifstream in(path);
    if (!in) raise(ErrorCode::FileNotFound, "cannot open '" + path + "'");

    std::string line;
    if (!std::getline(in, line))
        raise(ErrorCode::HeaderMismatch, "'" + path + "' is empty, expected a header line");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    const auto header = split_csv_line(line);
    if (header.size() != schema.width())
        raise(ErrorCode::HeaderMismatch,
              "expected " + std::to_string(schema.width()) + " columns, found " +
                  std::to_string(header.size()));
    for (std::size_t j = 0; j < header.size(); ++j) {
        const std::string found = trim(header[j]);
        if (found != schema.attributes[j].name)
            raise(ErrorCode::HeaderMismatch,
                  "column " + std::to_string(j + 1) + ": expected '" + schema.attributes[j].name +
                      "', found '" + found + "'");
    }

    // Closed category sets, for attributes that declare one.
    std::vector<const std::unordered_set<std::string>*> closed(schema.width(), nullptr);
    std::vector<std::unordered_set<std::string>> closed_storage;
    closed_storage.reserve(schema.width());
    for (std::size_t j = 0; j < schema.width(); ++j) {
        if (schema.attributes[j].categories) {
            closed_storage.emplace_back(schema.attributes[j].categories->begin(),
                                        schema.attributes[j].categories->end());
            closed[j] = &closed_storage.back();
        }
    }

    RawTable table;
    table.schema = schema;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() && in.peek() == std::char_traits<char>::eof()) break; // trailing newline

        auto cells = split_csv_line(line);
        if (cells.size() != schema.width())
            raise(ErrorCode::RowWidthMismatch,
                  "line " + std::to_string(line_no) + ": expected " + std::to_string(schema.width()) +
                      " cells, found " + std::to_string(cells.size()));
        for (std::size_t j = 0; j < cells.size(); ++j) {
            const auto& attr = schema.attributes[j];
            if (trim(cells[j]).empty())
                raise(ErrorCode::MissingValue,
                      "line " + std::to_string(line_no) + ", column '" + attr.name + "'");
            if (attr.is_numeric()) {
                double v;
                if (!parse_finite(cells[j], v))
                    raise(ErrorCode::UnparseableNumeric,
                          "line " + std::to_string(line_no) + ", column '" + attr.name + "': '" +
                              cells[j] + "'");
            } else if (closed[j] && !closed[j]->count(cells[j])) {
                raise(ErrorCode::UnknownCategory,
                      "line " + std::to_string(line_no) + ", column '" + attr.name + "': '" +
                          cells[j] + "'");
            }
        }
        table.rows.push_back(std::move(cells));
    }
    return table;
}

void write_csv(const RawTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(ErrorCode::IoError, "cannot write '" + path + "'");
    for (std::size_t j = 0; j < table.schema.width(); ++j) {
        if (j) out << ',';
        out << table.schema.attributes[j].name;
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << ',';
            out << row[j];
        }
        out << '\n';
    }
    if (!out) raise(ErrorCode::IoError, "failed writing '" + path + "'");
}

int EncodingMap::code_of(std::size_t attribute, const std::string& category) const {
    const auto attr_it = codes.find(attribute);
    if (attr_it == codes.end())
        raise(ErrorCode::UnknownCategory, "attribute index " + std::to_string(attribute) + " is not encoded");
    const auto cat_it = attr_it->second.find(category);
    if (cat_it == attr_it->second.end())
        raise(ErrorCode::UnknownCategory, "category '" + category + "' was not seen when fitting the encoding");
    return cat_it->second;
}

EncodingMap fit_encoding(const RawTable& table) {
    if (table.rows.empty()) raise(ErrorCode::EmptyTable, "cannot fit an encoding on an empty table");

    EncodingMap map;
    for (std::size_t j = 0; j < table.schema.width(); ++j) {
        if (!table.schema.attributes[j].is_categorical()) continue;
        std::set<std::string> observed;
        for (const auto& row : table.rows) observed.insert(row[j]);
        auto& codes = map.codes[j];
        int next = 0;
        for (const auto& category : observed) codes.emplace(category, next++);
    }
    return map;
}

std::size_t FeatureMatrix::positives() const {
    std::size_t count = 0;
    for (const int y : labels) count += static_cast<std::size_t>(y);
    return count;
}

std::vector<std::pair<double, double>> normalize_columns(std::vector<double>& values,
                                                         std::size_t n, std::size_t p) {
    std::vector<std::pair<double, double>> stats(p, {0.0, 0.0});
    for (std::size_t j = 0; j < p; ++j) {
        double lo = values[j], hi = values[j];
        for (std::size_t i = 1; i < n; ++i) {
            lo = std::min(lo, values[i * p + j]);
            hi = std::max(hi, values[i * p + j]);
        }
        stats[j] = {lo, hi};
        const double width = hi - lo;
        for (std::size_t i = 0; i < n; ++i) {
            double& v = values[i * p + j];
            v = width > 0.0 ? (v - lo) / width : 0.0;
        }
    }
    return stats;
}

FeatureMatrix encode_and_normalize(const RawTable& table, const EncodingMap& map,
                                   const std::string& positive_class) {
    if (table.rows.empty()) raise(ErrorCode::EmptyTable, "cannot encode an empty table");
    const auto& schema = table.schema;
    const std::size_t target = schema.target_index();
    const auto features = schema.feature_indexes();

    // Target must have exactly two observed categories, one of them positive_class.
    std::set<std::string> target_categories;
    for (const auto& row : table.rows) target_categories.insert(row[target]);
    if (target_categories.size() != 2)
        raise(ErrorCode::NonBinaryTarget,
              "target '" + schema.attributes[target].name + "' has " +
                  std::to_string(target_categories.size()) + " observed categories, need 2");
    if (!target_categories.count(positive_class))
        raise(ErrorCode::UnknownCategory,
              "positive class '" + positive_class + "' does not appear in target column '" +
                  schema.attributes[target].name + "'");

    FeatureMatrix m;
    m.n = table.n_rows();
    m.p = features.size();
    m.values.resize(m.n * m.p);
    m.labels.resize(m.n);
    m.positive_class_name = positive_class;
    for (const std::size_t j : features) m.feature_names.push_back(schema.attributes[j].name);

    for (std::size_t i = 0; i < m.n; ++i) {
        const auto& row = table.rows[i];
        for (std::size_t c = 0; c < features.size(); ++c) {
            const std::size_t j = features[c];
            const auto& attr = schema.attributes[j];
            double v;
            if (attr.is_categorical()) {
                v = static_cast<double>(map.code_of(j, row[j]));
            } else if (!
                [&] {
                    double parsed;
                    const bool ok = [&] {
                        const std::string t = row[j];
                        const auto b = t.find_first_not_of(" \t");
                        std::string s = b == std::string::npos ? t : t.substr(b);
                        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
                        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), parsed);
                        return ec == std::errc{} && ptr == s.data() + s.size() && std::isfinite(parsed);
                    }();
                    v = parsed;
                    return ok;
                }()) {
                raise(ErrorCode::UnparseableNumeric,
                      "row " + std::to_string(i + 1) + ", column '" + attr.name + "': '" + row[j] + "'");
            }
            m.values[i * m.p + c] = v;
        }
        m.labels[i] = row[target] == positive_class ? 1 : 0;
    }

    m.column_stats = normalize_columns(m.values, m.n, m.p);
    return m;
}

std::vector<double> correlation_matrix(const FeatureMatrix& m) {
    if (m.n < 2) raise(ErrorCode::TooFewRows, "correlation needs at least 2 rows");
    const std::size_t p = m.p;

    std::vector<double> mean(p, 0.0), sd(p, 0.0);
    for (std::size_t j = 0; j < p; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < m.n; ++i) sum += m.at(i, j);
        mean[j] = sum / static_cast<double>(m.n);
        double ss = 0.0;
        for (std::size_t i = 0; i < m.n; ++i) {
            const double d = m.at(i, j) - mean[j];
            ss += d * d;
        }
        sd[j] = std::sqrt(ss);
    }

    std::vector<double> corr(p * p, 0.0);
    for (std::size_t a = 0; a < p; ++a) {
        corr[a * p + a] = 1.0;
        for (std::size_t b = a + 1; b < p; ++b) {
            double value = 0.0;
            if (sd[a] > 0.0 && sd[b] > 0.0) {
                double cov = 0.0;
                for (std::size_t i = 0; i < m.n; ++i)
                    cov += (m.at(i, a) - mean[a]) * (m.at(i, b) - mean[b]);
                value = cov / (sd[a] * sd[b]);
            }
            corr[a * p + b] = value;
            corr[b * p + a] = value;
        }
    }
    return corr;
}

FeatureMatrix subset_rows(const FeatureMatrix& m, std::span<const std::size_t> indices) {
    FeatureMatrix out;
    out.n = indices.size();
    out.p = m.p;
    out.values.resize(out.n * out.p);
    out.labels.resize(out.n);
    out.column_stats = m.column_stats;
    out.feature_names = m.feature_names;
    out.positive_class_name = m.positive_class_name;
    for (std::size_t r = 0; r < indices.size(); ++r) {
        const std::size_t i = indices[r];
        std::copy_n(m.values.data() + i * m.p, m.p, out.values.data() + r * m.p);
        out.labels[r] = m.labels[i];
    }
    return out;
}

} // namespace tabml::data
