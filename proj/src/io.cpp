#include "groupinspect/io.hpp"

#include "groupinspect/errors.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace groupinspect {

using nlohmann::json;

namespace {

std::vector<std::string> split_csv_line(const std::string& line, const std::string& source,
                                        std::size_t lineno) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (c != '\r') {
            field.push_back(c);
        }
    }
    if (quoted)
        throw ParseError(source + ":" + std::to_string(lineno) + ": unterminated quoted field");
    fields.push_back(std::move(field));
    return fields;
}

bool parse_double(const std::string& field, double& out) {
    if (field.empty()) return false;
    const char* begin = field.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    while (end && *end != '\0' && std::isspace(static_cast<unsigned char>(*end))) ++end;
    return end != nullptr && *end == '\0';
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    return in;
}

json parse_json(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(source + ": " + e.what());
    }
}

Grouping grouping_from_json_value(const json& doc, int p, const std::string& source) {
    if (!doc.is_array())
        throw ParseError(source + ": grouping must be an array of index arrays");
    std::vector<std::vector<int>> groups;
    groups.reserve(doc.size());
    for (std::size_t g = 0; g < doc.size(); ++g) {
        const auto& entry = doc[g];
        if (!entry.is_array())
            throw ParseError(source + ": group " + std::to_string(g + 1) +
                             " must be an array of 1-based indices");
        std::vector<int> idx;
        idx.reserve(entry.size());
        for (const auto& v : entry) {
            if (!v.is_number_integer())
                throw ParseError(source + ": group " + std::to_string(g + 1) +
                                 " contains a non-integer index");
            idx.push_back(v.get<int>() - 1);
        }
        groups.push_back(std::move(idx));
    }
    return Grouping(std::move(groups), p);
}

json grouping_to_json_value(const Grouping& grouping) {
    json doc = json::array();
    for (const auto& g : grouping.groups()) {
        json entry = json::array();
        for (int j : g) entry.push_back(j + 1);
        doc.push_back(std::move(entry));
    }
    return doc;
}

} // namespace

Matrix read_csv_matrix(std::istream& in, const std::string& source) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    bool first_content_row = true;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || (line.size() == 1 && line[0] == '\r')) continue;
        const auto fields = split_csv_line(line, source, lineno);
        std::vector<double> values(fields.size());
        bool all_numeric = true;
        std::size_t bad_col = 0;
        for (std::size_t c = 0; c < fields.size(); ++c) {
            if (!parse_double(fields[c], values[c])) {
                all_numeric = false;
                bad_col = c + 1;
                break;
            }
        }
        if (!all_numeric) {
            if (first_content_row) { // optional header row of time labels
                first_content_row = false;
                continue;
            }
            throw ParseError(source + ":" + std::to_string(lineno) + ": column " +
                             std::to_string(bad_col) + ": field is not a number " +
                             "(missing values must be cleaned before ingestion)");
        }
        for (std::size_t c = 0; c < values.size(); ++c) {
            if (!std::isfinite(values[c]))
                throw ParseError(source + ":" + std::to_string(lineno) + ": column " +
                                 std::to_string(c + 1) + ": non-finite value");
        }
        first_content_row = false;
        if (width == 0) {
            width = values.size();
        } else if (values.size() != width) {
            throw ParseError(source + ":" + std::to_string(lineno) + ": expected " +
                             std::to_string(width) + " columns, found " +
                             std::to_string(values.size()));
        }
        rows.push_back(std::move(values));
    }
    if (rows.empty()) throw ParseError(source + ": no data rows");
    Matrix M(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(width));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < width; ++c)
            M(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    return M;
}

Matrix read_csv_matrix_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_csv_matrix(in, path);
}

std::string format_double(double value) {
    return json(value).dump();
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += "\"\"";
        else quoted.push_back(c);
    }
    quoted.push_back('"');
    return quoted;
}

void write_csv_matrix(std::ostream& out, const Matrix& M) {
    for (Eigen::Index r = 0; r < M.rows(); ++r) {
        for (Eigen::Index c = 0; c < M.cols(); ++c) {
            if (c > 0) out << ',';
            out << format_double(M(r, c));
        }
        out << '\n';
    }
}

Grouping read_grouping_json(std::istream& in, int p, const std::string& source) {
    std::ostringstream text;
    text << in.rdbuf();
    return grouping_from_json_value(parse_json(text.str(), source), p, source);
}

Grouping read_grouping_json_file(const std::string& path, int p) {
    auto in = open_or_throw(path);
    return read_grouping_json(in, p, path);
}

std::string grouping_to_json(const Grouping& grouping) {
    return grouping_to_json_value(grouping).dump();
}

std::string scenario_to_json(const ChangeScenario& scenario) {
    json doc;
    doc["n"] = scenario.n;
    doc["p"] = scenario.p;
    doc["groups"] = grouping_to_json_value(scenario.grouping);
    doc["change_times"] = scenario.change_times;
    json levels = json::array();
    for (const auto& mu : scenario.mean_levels)
        levels.push_back(std::vector<double>(mu.begin(), mu.end()));
    doc["mean_levels"] = std::move(levels);
    doc["sigma"] = scenario.sigma;
    return doc.dump();
}

ChangeScenario scenario_from_json(const std::string& text) {
    const json doc = parse_json(text, "<scenario>");
    try {
        const int n = doc.at("n").get<int>();
        const int p = doc.at("p").get<int>();
        Grouping grouping = grouping_from_json_value(doc.at("groups"), p, "<scenario>");
        std::vector<int> change_times = doc.at("change_times").get<std::vector<int>>();
        std::vector<Vector> levels;
        for (const auto& entry : doc.at("mean_levels")) {
            const auto values = entry.get<std::vector<double>>();
            levels.push_back(Eigen::Map<const Vector>(values.data(),
                                                      static_cast<Eigen::Index>(values.size())));
        }
        ChangeScenario sc{n, p, std::move(grouping), std::move(change_times),
                          std::move(levels), doc.at("sigma").get<double>()};
        sc.validate();
        return sc;
    } catch (const json::exception& e) {
        throw ParseError(std::string("<scenario>: ") + e.what());
    }
}

ChangeScenario read_scenario_json_file(const std::string& path) {
    auto in = open_or_throw(path);
    std::ostringstream text;
    text << in.rdbuf();
    return scenario_from_json(text.str());
}

std::string segmentation_to_json(const Segmentation& seg, int n) {
    json doc;
    doc["n"] = n;
    doc["change_points"] = seg.change_points;
    json log = json::array();
    for (const auto& rec : seg.interval_log)
        log.push_back({{"s", rec.s}, {"e", rec.e}, {"b", rec.b}, {"stat", rec.statistic}});
    doc["interval_log"] = std::move(log);
    return doc.dump();
}

Segmentation segmentation_from_json(const std::string& text) {
    const json doc = parse_json(text, "<segmentation>");
    try {
        Segmentation seg;
        seg.change_points = doc.at("change_points").get<std::vector<int>>();
        for (const auto& entry : doc.at("interval_log")) {
            IntervalRecord rec;
            rec.s = entry.at("s").get<int>();
            rec.e = entry.at("e").get<int>();
            rec.b = entry.at("b").get<int>();
            rec.statistic = entry.at("stat").get<double>();
            seg.interval_log.push_back(std::move(rec));
        }
        return seg;
    } catch (const json::exception& e) {
        throw ParseError(std::string("<segmentation>: ") + e.what());
    }
}

void write_segmentation_csv(std::ostream& out, const Segmentation& seg) {
    out << "change_point\n";
    for (int z : seg.change_points) out << z << '\n';
}

} // namespace groupinspect
