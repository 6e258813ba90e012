#include "annulus/io.hpp"

#include <charconv>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "annulus/errors.hpp"

namespace annulus::io {

using nlohmann::json;

namespace {

json parse_json(std::string_view text, const char* field) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(field, std::string("invalid JSON: ") + e.what());
    }
}

const json& require_key(const json& object, const char* key, const std::string& where) {
    if (!object.is_object()) throw SchemaError(where, "expected a JSON object");
    const auto it = object.find(key);
    if (it == object.end()) throw SchemaError(where.empty() ? key : where + "." + key, "missing key");
    return *it;
}

double as_number(const json& value, const std::string& field) {
    if (!value.is_number()) throw SchemaError(field, "expected a number");
    return value.get<double>();
}

std::vector<double> as_number_list(const json& value, const std::string& field) {
    if (!value.is_array()) throw SchemaError(field, "expected an array of numbers");
    std::vector<double> out;
    out.reserve(value.size());
    for (const auto& v : value) out.push_back(as_number(v, field));
    return out;
}

TrigSeries trig_series_from(const json& object, const std::string& where) {
    const std::string prefix = where.empty() ? "" : where + ".";
    const double a0 = as_number(require_key(object, "a0", where), prefix + "a0");
    auto c = as_number_list(require_key(object, "cos", where), prefix + "cos");
    auto s = as_number_list(require_key(object, "sin", where), prefix + "sin");
    if (c.size() != s.size()) {
        throw SchemaError(prefix + "sin", "cos and sin lists differ in length");
    }
    try {
        return TrigSeries(a0, std::move(c), std::move(s));
    } catch (const SchemaError& e) {
        throw SchemaError(prefix + e.field(), e.what());
    }
}

json trig_series_json(const TrigSeries& f) {
    return {{"a0", f.mean()},
            {"cos", std::vector<double>(f.cos_coeffs().begin(), f.cos_coeffs().end())},
            {"sin", std::vector<double>(f.sin_coeffs().begin(), f.sin_coeffs().end())}};
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

}  // namespace

std::string format_number(double value) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    return std::string(buf, result.ptr);
}

double parse_number(std::string_view text, const char* field) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
    if (result.ec != std::errc() || result.ptr != text.data() + text.size() || text.empty()) {
        throw SchemaError(field, "cannot parse number '" + std::string(text) + "'");
    }
    return value;
}

TrigSeries parse_trig_series(std::string_view json_text) {
    return trig_series_from(parse_json(json_text, "series"), "");
}

std::string to_json(const TrigSeries& f) { return trig_series_json(f).dump(); }

CauchyData parse_cauchy_data(std::string_view json_text) {
    const json doc = parse_json(json_text, "input");
    return {trig_series_from(require_key(doc, "g", ""), "g"),
            trig_series_from(require_key(doc, "h", ""), "h")};
}

std::string to_json(const CauchyData& data) {
    return json{{"g", trig_series_json(data.g)}, {"h", trig_series_json(data.h)}}.dump();
}

LaurentPoly parse_laurent(std::string_view json_text) {
    const json doc = parse_json(json_text, "laurent");
    const auto& powers_json = require_key(doc, "powers", "");
    if (!powers_json.is_array()) throw SchemaError("powers", "expected an array of integers");
    std::vector<int> powers;
    for (const auto& p : powers_json) {
        if (!p.is_number_integer()) throw SchemaError("powers", "expected integer powers");
        powers.push_back(p.get<int>());
    }
    const auto re = as_number_list(require_key(doc, "re", ""), "re");
    const auto im = as_number_list(require_key(doc, "im", ""), "im");
    if (re.size() != powers.size()) throw SchemaError("re", "length differs from powers");
    if (im.size() != powers.size()) throw SchemaError("im", "length differs from powers");
    std::vector<Complex> coeffs(powers.size());
    for (std::size_t k = 0; k < powers.size(); ++k) coeffs[k] = {re[k], im[k]};
    return LaurentPoly::from_terms(powers, coeffs);
}

std::vector<double> parse_samples_csv(std::string_view text) {
    std::vector<double> out;
    for (auto line : split(text, '\n')) {
        line = trim(line);
        if (line.empty()) continue;
        out.push_back(parse_number(line, "samples"));
    }
    return out;
}

std::string to_csv(const Field& field) {
    std::string out = "# solver_tag: " + field.solver_tag() + "\nr,phi,u\n";
    for (std::size_t i = 0; i < field.radii().size(); ++i) {
        for (std::size_t j = 0; j < field.angles().size(); ++j) {
            out += format_number(field.radii()[i]);
            out += ',';
            out += format_number(field.angles()[j]);
            out += ',';
            out += format_number(field.at(i, j));
            out += '\n';
        }
    }
    return out;
}

Field parse_field_csv(std::string_view text) {
    auto lines = split(text, '\n');
    std::size_t k = 0;
    std::string tag;
    constexpr std::string_view kTagPrefix = "# solver_tag:";
    if (k < lines.size() && trim(lines[k]).starts_with(kTagPrefix)) {
        tag = std::string(trim(trim(lines[k]).substr(kTagPrefix.size())));
        ++k;
    }
    if (k >= lines.size() || trim(lines[k]) != "r,phi,u") {
        throw SchemaError("field", "expected header 'r,phi,u'");
    }
    ++k;

    std::vector<double> radii, angles, values;
    for (; k < lines.size(); ++k) {
        const auto line = trim(lines[k]);
        if (line.empty()) continue;
        const auto cols = split(line, ',');
        if (cols.size() != 3) throw SchemaError("field", "expected 3 columns in '" + std::string(line) + "'");
        const double r = parse_number(cols[0], "r");
        const double phi = parse_number(cols[1], "phi");
        values.push_back(parse_number(cols[2], "u"));
        if (radii.empty() || radii.back() != r) radii.push_back(r);
        if (radii.size() == 1) angles.push_back(phi);
    }
    if (radii.empty() || radii.size() * angles.size() != values.size()) {
        throw SchemaError("field", "rows do not form a radii x angles grid");
    }
    Field field(std::move(radii), std::move(angles), std::move(tag));
    const std::size_t columns = field.angles().size();
    for (std::size_t v = 0; v < values.size(); ++v) field.at(v / columns, v % columns) = values[v];
    return field;
}

std::string to_csv(std::span<const InstabilityRecord> rows) {
    std::string out = "n,data_norm,solution_sup,amplification\n";
    for (const auto& row : rows) {
        out += std::to_string(row.n) + ',' + format_number(row.data_norm) + ',' +
               format_number(row.solution_sup) + ',' + format_number(row.amplification) + '\n';
    }
    return out;
}

std::string to_json(std::span<const DroppedMode> dropped) {
    json list = json::array();
    for (const auto& d : dropped) {
        list.push_back({{"part", std::string(1, d.part)}, {"n", d.n}, {"gain", d.gain}});
    }
    return list.dump();
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("input", "cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    auto temp = path;
    temp += ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw SchemaError("out", "cannot write '" + temp.string() + "'");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw SchemaError("out", "write failed for '" + temp.string() + "'");
    }
    std::filesystem::rename(temp, path);
}

}  // namespace annulus::io
