#include "spectrasat/dataset_io.hpp"

#include "spectrasat/error.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace spectrasat {

using nlohmann::json;

namespace {

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

std::string quote(const std::string& s) { return json(s).dump(); }

[[noreturn]] void parse_fail(const std::string& path, std::size_t line, const std::string& why) {
    throw ValidationError("parse error in " + path + " at line " + std::to_string(line) + ": " + why);
}

// ---- JSONL ----

void save_jsonl(const Dataset& ds, std::ostream& out) {
    std::ostringstream header;
    header << "{\"grid\":{\"start_cm1\":" << fmt17(ds.grid().start_cm1())
           << ",\"end_cm1\":" << fmt17(ds.grid().end_cm1())
           << ",\"points\":" << ds.grid().points() << "},\"class_names\":[";
    for (std::size_t i = 0; i < ds.class_names().size(); ++i) {
        if (i) header << ",";
        header << quote(ds.class_names()[i]);
    }
    header << "]";
    if (!ds.provenance().empty()) {
        header << ",\"provenance\":" << json(ds.provenance()).dump();
    }
    header << "}";
    out << header.str() << "\n";
    for (const auto& s : ds.spectra()) {
        out << "{\"id\":" << quote(s.id) << ",\"label\":" << quote(s.label)
            << ",\"cohort\":" << quote(s.cohort) << ",\"values\":[";
        for (std::size_t j = 0; j < s.values.size(); ++j) {
            if (j) out << ",";
            out << fmt17(s.values[j]);
        }
        out << "]";
        if (!s.meta.empty()) out << ",\"meta\":" << json(s.meta).dump();
        out << "}\n";
    }
}

Dataset load_jsonl(std::istream& in, const std::string& path) {
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line) || line.empty()) {
        parse_fail(path, 1, "no records");
    }
    ++lineno;
    json header = json::parse(line, nullptr, false);
    if (header.is_discarded() || !header.is_object() || !header.contains("grid") ||
        !header.contains("class_names")) {
        parse_fail(path, lineno, "expected header object with grid and class_names");
    }
    const json& g = header["grid"];
    if (!g.contains("start_cm1") || !g.contains("end_cm1") || !g.contains("points")) {
        parse_fail(path, lineno, "incomplete grid header");
    }
    WavenumberGrid grid(g["start_cm1"].get<double>(), g["end_cm1"].get<double>(),
                        g["points"].get<int>());
    Dataset ds(grid, header["class_names"].get<std::vector<std::string>>());
    if (header.contains("provenance")) {
        ds.provenance() = header["provenance"].get<std::map<std::string, std::string>>();
    }
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json row = json::parse(line, nullptr, false);
        if (row.is_discarded() || !row.is_object()) {
            parse_fail(path, lineno, "invalid JSON object");
        }
        for (const char* key : {"id", "label", "cohort", "values"}) {
            if (!row.contains(key)) parse_fail(path, lineno, std::string("missing field '") + key + "'");
        }
        Spectrum s;
        s.id = row["id"].get<std::string>();
        s.label = row["label"].get<std::string>();
        s.cohort = row["cohort"].get<std::string>();
        s.values = row["values"].get<std::vector<double>>();
        if (row.contains("meta")) {
            s.meta = row["meta"].get<std::map<std::string, std::string>>();
        }
        ds.add(std::move(s)); // reports grid mismatch / unknown label with the id
    }
    return ds;
}

// ---- CSV ----

bool needs_quoting(const std::string& f) {
    return f.find_first_of(",\"\n\r") != std::string::npos;
}

std::string csv_field(const std::string& f) {
    if (!needs_quoting(f)) return f;
    std::string out = "\"";
    for (char c : f) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::vector<std::string> split_csv_line(const std::string& line, const std::string& path,
                                        std::size_t lineno) {
    std::vector<std::string> fields;
    std::string cur;
    bool in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (in_quotes) parse_fail(path, lineno, "unterminated quoted field");
    fields.push_back(cur);
    return fields;
}

const char* const kProvenanceCols[] = {"parent_a", "parent_b", "lambda", "alpha"};

void save_csv(const Dataset& ds, std::ostream& out) {
    bool any_meta = false;
    for (const auto& s : ds.spectra()) {
        if (!s.meta.empty()) any_meta = true;
    }
    out << "id,label,cohort";
    if (any_meta) {
        for (const char* c : kProvenanceCols) out << "," << c;
    }
    for (int i = 0; i < ds.grid().points(); ++i) {
        out << "," << fmt4(ds.grid().wavenumber(i));
    }
    out << "\n";
    for (const auto& s : ds.spectra()) {
        out << csv_field(s.id) << "," << csv_field(s.label) << "," << csv_field(s.cohort);
        if (any_meta) {
            for (const char* c : kProvenanceCols) {
                const auto it = s.meta.find(c);
                out << "," << csv_field(it == s.meta.end() ? "" : it->second);
            }
        }
        for (double v : s.values) out << "," << fmt17(v);
        out << "\n";
    }
}

Dataset load_csv(std::istream& in, const std::string& path) {
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line) || line.empty()) {
        parse_fail(path, 1, "no records");
    }
    ++lineno;
    const auto header = split_csv_line(line, path, lineno);
    if (header.size() < 3 || header[0] != "id" || header[1] != "label" || header[2] != "cohort") {
        parse_fail(path, lineno, "expected columns id,label,cohort,...");
    }
    std::size_t first_value_col = 3;
    bool has_prov = header.size() >= 7 && header[3] == "parent_a";
    if (has_prov) first_value_col = 7;
    if (header.size() < first_value_col + 3) {
        parse_fail(path, lineno, "fewer than 3 wavenumber columns");
    }
    const int points = static_cast<int>(header.size() - first_value_col);
    double start = 0.0, end = 0.0;
    try {
        start = std::stod(header[first_value_col]);
        end = std::stod(header.back());
    } catch (const std::exception&) {
        parse_fail(path, lineno, "wavenumber columns must be numeric");
    }
    WavenumberGrid grid(start, end, points);

    struct Row {
        Spectrum s;
    };
    std::vector<Row> rows;
    std::vector<std::string> class_names; // CSV stores no class list; order of first appearance
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto fields = split_csv_line(line, path, lineno);
        if (fields.size() != header.size()) {
            parse_fail(path, lineno, "expected " + std::to_string(header.size()) +
                                         " fields, got " + std::to_string(fields.size()));
        }
        Row r;
        r.s.id = fields[0];
        r.s.label = fields[1];
        r.s.cohort = fields[2];
        if (has_prov) {
            for (std::size_t k = 0; k < 4; ++k) {
                if (!fields[3 + k].empty()) r.s.meta[kProvenanceCols[k]] = fields[3 + k];
            }
        }
        r.s.values.reserve(points);
        for (std::size_t k = first_value_col; k < fields.size(); ++k) {
            try {
                r.s.values.push_back(std::stod(fields[k]));
            } catch (const std::exception&) {
                parse_fail(path, lineno, "non-numeric value in column " + std::to_string(k + 1));
            }
        }
        if (std::find(class_names.begin(), class_names.end(), r.s.label) == class_names.end()) {
            class_names.push_back(r.s.label);
        }
        rows.push_back(std::move(r));
    }
    Dataset ds(grid, class_names);
    for (auto& r : rows) ds.add(std::move(r.s));
    return ds;
}

} // namespace

DatasetFormat format_from_name(const std::string& name) {
    if (name == "jsonl") return DatasetFormat::jsonl;
    if (name == "csv") return DatasetFormat::csv;
    throw ValidationError("unknown dataset format '" + name + "' (expected jsonl or csv)");
}

static DatasetFormat format_from_path(const std::string& path) {
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return DatasetFormat::csv;
    return DatasetFormat::jsonl;
}

Dataset load_dataset(const std::string& path, DatasetFormat format) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open dataset file: " + path);
    return format == DatasetFormat::jsonl ? load_jsonl(in, path) : load_csv(in, path);
}

Dataset load_dataset(const std::string& path) {
    return load_dataset(path, format_from_path(path));
}

void save_dataset(const Dataset& ds, const std::string& path, DatasetFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw RuntimeError("cannot open file for writing: " + path);
    if (format == DatasetFormat::jsonl) save_jsonl(ds, out);
    else save_csv(ds, out);
    if (!out.good()) throw RuntimeError("I/O failure while writing: " + path);
}

void save_dataset(const Dataset& ds, const std::string& path) {
    save_dataset(ds, path, format_from_path(path));
}

} // namespace spectrasat
