#include "data/schema.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "error.hpp"

namespace tabml::data {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) out.push_back(item);
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

double parse_double_or_raise(const std::string& text, const std::string& context) {
    const std::string t = trim(text);
    double value = 0.0;
    const auto* first = t.data();
    const auto* last = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        raise(ErrorCode::InvalidConfig, "cannot parse number '" + text + "' in " + context);
    return value;
}

} // namespace

std::size_t DatasetSchema::target_index() const {
    for (std::size_t i = 0; i < attributes.size(); ++i)
        if (attributes[i].role == AttributeRole::Target) return i;
    raise(ErrorCode::InvalidConfig, "schema has no target attribute");
}

std::vector<std::size_t> DatasetSchema::feature_indexes() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < attributes.size(); ++i)
        if (attributes[i].role == AttributeRole::Feature) out.push_back(i);
    return out;
}

void DatasetSchema::validate() const {
    if (attributes.empty()) raise(ErrorCode::InvalidConfig, "schema has no attributes");

    std::size_t targets = 0;
    std::set<std::string> names;
    for (const auto& attr : attributes) {
        if (attr.name.empty()) raise(ErrorCode::InvalidConfig, "schema attribute with empty name");
        if (!names.insert(attr.name).second)
            raise(ErrorCode::InvalidConfig, "duplicate attribute name '" + attr.name + "'");
        if (attr.role == AttributeRole::Target) ++targets;
        if (attr.categories) {
            if (!attr.is_categorical())
                raise(ErrorCode::InvalidConfig, "attribute '" + attr.name + "' declares categories but is not categorical");
            std::set<std::string> distinct(attr.categories->begin(), attr.categories->end());
            if (distinct.size() != attr.categories->size())
                raise(ErrorCode::InvalidConfig, "attribute '" + attr.name + "' has duplicate categories");
            if (distinct.size() < 2)
                raise(ErrorCode::InvalidConfig, "attribute '" + attr.name + "' declares fewer than two categories");
        }
        if (attr.numeric_range) {
            if (!attr.is_numeric())
                raise(ErrorCode::InvalidConfig, "attribute '" + attr.name + "' declares a range but is not numeric");
            if (!(attr.numeric_range->first < attr.numeric_range->second))
                raise(ErrorCode::InvalidConfig, "attribute '" + attr.name + "' has an empty numeric range");
        }
    }
    if (targets != 1)
        raise(ErrorCode::InvalidConfig, "schema must have exactly one target attribute, found " + std::to_string(targets));
}

const char* kind_name(AttributeKind kind) {
    switch (kind) {
    case AttributeKind::Categorical: return "categorical";
    case AttributeKind::Integer: return "integer";
    case AttributeKind::Continuous: return "continuous";
    }
    return "?";
}

const char* role_name(AttributeRole role) {
    return role == AttributeRole::Target ? "target" : "feature";
}

namespace {

AttributeKind parse_kind(const std::string& text, int line_no) {
    if (text == "categorical") return AttributeKind::Categorical;
    if (text == "integer") return AttributeKind::Integer;
    if (text == "continuous") return AttributeKind::Continuous;
    raise(ErrorCode::InvalidConfig,
          "unknown attribute kind '" + text + "' at schema line " + std::to_string(line_no));
}

AttributeRole parse_role(const std::string& text, int line_no) {
    if (text == "feature") return AttributeRole::Feature;
    if (text == "target") return AttributeRole::Target;
    raise(ErrorCode::InvalidConfig,
          "unknown attribute role '" + text + "' at schema line " + std::to_string(line_no));
}

} // namespace

DatasetSchema parse_schema(const std::string& text) {
    DatasetSchema schema;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;

        const auto fields = split(stripped, '|');
        if (fields.size() < 3)
            raise(ErrorCode::InvalidConfig,
                  "schema line " + std::to_string(line_no) + " needs at least name | kind | role");

        AttributeSpec attr;
        attr.name = trim(fields[0]);
        attr.kind = parse_kind(trim(fields[1]), line_no);
        attr.role = parse_role(trim(fields[2]), line_no);

        for (std::size_t i = 3; i < fields.size(); ++i) {
            const std::string option = trim(fields[i]);
            if (option.rfind("categories=", 0) == 0) {
                std::vector<std::string> cats;
                for (const auto& c : split(option.substr(11), ';')) cats.push_back(trim(c));
                attr.categories = std::move(cats);
            } else if (option.rfind("range=", 0) == 0) {
                const std::string body = option.substr(6);
                const auto dots = body.find("..");
                if (dots == std::string::npos)
                    raise(ErrorCode::InvalidConfig,
                          "range option must look like range=lo..hi at schema line " + std::to_string(line_no));
                attr.numeric_range = {parse_double_or_raise(body.substr(0, dots), "schema range"),
                                      parse_double_or_raise(body.substr(dots + 2), "schema range")};
            } else {
                raise(ErrorCode::InvalidConfig,
                      "unknown schema option '" + option + "' at line " + std::to_string(line_no));
            }
        }
        schema.attributes.push_back(std::move(attr));
    }
    schema.validate();
    return schema;
}

DatasetSchema load_schema(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::FileNotFound, "cannot open schema file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_schema(buffer.str());
}

std::string format_schema(const DatasetSchema& schema) {
    std::ostringstream out;
    for (const auto& attr : schema.attributes) {
        out << attr.name << " | " << kind_name(attr.kind) << " | " << role_name(attr.role);
        if (attr.categories) {
            out << " | categories=";
            for (std::size_t i = 0; i < attr.categories->size(); ++i) {
                if (i) out << ';';
                out << (*attr.categories)[i];
            }
        }
        if (attr.numeric_range)
            out << " | range=" << attr.numeric_range->first << ".." << attr.numeric_range->second;
        out << '\n';
    }
    return out.str();
}

DatasetSchema breast_cancer_schema() {
    DatasetSchema schema;
    auto numeric = [](std::string name, AttributeKind kind, double lo, double hi) {
        AttributeSpec a;
        a.name = std::move(name);
        a.kind = kind;
        a.numeric_range = {lo, hi};
        return a;
    };
    auto categorical = [](std::string name) {
        AttributeSpec a;
        a.name = std::move(name);
        a.kind = AttributeKind::Categorical;
        return a;
    };

    schema.attributes.push_back(numeric("Age", AttributeKind::Integer, 30, 69));
    schema.attributes.push_back(categorical("Race"));
    schema.attributes.push_back(categorical("Marital Status"));
    schema.attributes.push_back(categorical("T Stage"));
    schema.attributes.push_back(categorical("N Stage"));
    schema.attributes.push_back(categorical("6th Stage"));
    schema.attributes.push_back(categorical("differentiate"));
    schema.attributes.push_back(categorical("Grade"));
    schema.attributes.push_back(categorical("A Stage"));
    schema.attributes.push_back(numeric("Tumor Size", AttributeKind::Integer, 1, 140));
    schema.attributes.push_back(categorical("Estrogen Status"));
    schema.attributes.push_back(categorical("Progesterone Status"));
    schema.attributes.push_back(numeric("Regional Node Examined", AttributeKind::Integer, 1, 61));
    schema.attributes.push_back(numeric("Reginol Node Positive", AttributeKind::Integer, 1, 46));
    schema.attributes.push_back(numeric("Survival Months", AttributeKind::Integer, 1, 107));

    AttributeSpec status;
    status.name = "Status";
    status.kind = AttributeKind::Categorical;
    status.role = AttributeRole::Target;
    status.categories = std::vector<std::string>{"Alive", "Dead"};
    schema.attributes.push_back(std::move(status));

    schema.validate();
    return schema;
}

} // namespace tabml::data
