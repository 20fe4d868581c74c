#include "aszeta/spec_io.hpp"

#include <cctype>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "aszeta/check.hpp"

namespace aszeta {

u64 parse_hex_word(const std::string& s) {
    if (s.empty() || s.size() > 16)
        throw input_error("hex bit string must have 1 to 16 digits: '" + s + "'");
    u64 v = 0;
    for (char ch : s) {
        const int d = std::isdigit((unsigned char)ch) ? ch - '0'
                      : (ch >= 'a' && ch <= 'f')      ? ch - 'a' + 10
                      : (ch >= 'A' && ch <= 'F')      ? ch - 'A' + 10
                                                      : -1;
        if (d < 0) throw input_error("invalid hex digit in '" + s + "'");
        v = (v << 4) | (u64)d;
    }
    return v;
}

std::string hex_word(u64 v) {
    std::ostringstream os;
    os << std::hex << v;
    return os.str();
}

namespace {

std::string trimmed(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace((unsigned char)s[b])) ++b;
    while (e > b && std::isspace((unsigned char)s[e - 1])) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ',')) out.push_back(trimmed(item));
    if (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

CurveSpec parse_json_spec(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("spec is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw input_error("spec JSON must be an object");

    CurveSpec spec;
    if (!j.contains("m") || !j["m"].is_number_unsigned())
        throw input_error("spec needs an unsigned integer field 'm'");
    spec.m = j["m"].get<unsigned>();

    if (j.contains("field_modulus")) {
        if (!j["field_modulus"].is_string())
            throw input_error("'field_modulus' must be a hex bit string");
        spec.modulus = parse_hex_word(j["field_modulus"].get<std::string>());
    }

    if (!j.contains("R") || !j["R"].is_array())
        throw input_error("spec needs an array field 'R' of hex bit strings");
    for (const auto& e : j["R"]) {
        if (!e.is_string()) throw input_error("entries of 'R' must be hex bit strings");
        spec.a.push_back(parse_hex_word(e.get<std::string>()));
    }

    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "m" && key != "field_modulus" && key != "R")
            throw input_error("unknown spec field '" + key + "'");
    }
    return spec;
}

CurveSpec parse_kv_spec(const std::string& text) {
    CurveSpec spec;
    bool saw_m = false, saw_r = false;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trimmed(line);
        if (line.empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw input_error("expected key=value, got '" + line + "'");
        const std::string key = trimmed(line.substr(0, eq));
        const std::string value = trimmed(line.substr(eq + 1));
        if (key == "m") {
            try {
                size_t used = 0;
                const unsigned long v = std::stoul(value, &used, 10);
                if (used != value.size() || v == 0) throw std::invalid_argument("");
                spec.m = (unsigned)v;
            } catch (const std::exception&) {
                throw input_error("'m' must be a positive decimal integer, got '" + value + "'");
            }
            saw_m = true;
        } else if (key == "field_modulus") {
            spec.modulus = parse_hex_word(value);
        } else if (key == "R") {
            spec.a.clear();
            for (const std::string& item : split_list(value))
                spec.a.push_back(parse_hex_word(item));
            saw_r = true;
        } else {
            throw input_error("unknown spec key '" + key + "'");
        }
    }
    if (!saw_m) throw input_error("spec is missing 'm'");
    if (!saw_r) throw input_error("spec is missing 'R'");
    return spec;
}

} // namespace

CurveSpec parse_curve_spec_text(const std::string& text) {
    for (char ch : text) {
        if (std::isspace((unsigned char)ch)) continue;
        return ch == '{' ? parse_json_spec(text) : parse_kv_spec(text);
    }
    throw input_error("spec is empty");
}

CurveSpec load_curve_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open spec file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_curve_spec_text(buf.str());
}

std::string emit_curve_spec(const CurveSpec& spec) {
    const Gf2m k = spec_field(spec); // validates and resolves the modulus
    nlohmann::ordered_json j;
    j["m"] = spec.m;
    j["field_modulus"] = hex_word(k.modulus());
    auto r = nlohmann::ordered_json::array();
    for (u64 w : spec.a) r.push_back(hex_word(w));
    j["R"] = std::move(r);
    return j.dump(2) + "\n";
}

std::vector<CurveSpec> random_curve_specs(unsigned long seed, unsigned count,
                                          const std::vector<unsigned>& ms,
                                          unsigned d_max) {
    if (ms.empty()) throw input_error("need at least one base degree to draw from");
    if (d_max < 1 || d_max > kMaxTwoDegree)
        throw input_error("d_max must be between 1 and " + std::to_string(kMaxTwoDegree));
    for (unsigned m : ms)
        if (m < 1 || m > 63) throw input_error("base degrees must be between 1 and 63");

    std::mt19937_64 rng(seed);
    std::vector<CurveSpec> out;
    out.reserve(count);
    for (unsigned i = 0; i < count; ++i) {
        CurveSpec spec;
        spec.m = ms[rng() % ms.size()];
        spec.modulus = 0;
        const unsigned d = 1 + (unsigned)(rng() % d_max);
        const u64 mask = (spec.m == 63) ? ~u64(0) >> 1 : (u64(1) << spec.m) - 1;
        spec.a.resize(d + 1);
        for (unsigned t = 0; t < d; ++t) spec.a[t] = rng() & mask;
        spec.a[d] = 1 + rng() % mask; // nonzero leader
        out.push_back(std::move(spec));
    }
    return out;
}

} // namespace aszeta
