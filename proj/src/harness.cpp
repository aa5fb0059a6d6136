#include "hermite2d/harness.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace h2d::harness {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::string strip_comment(const std::string& line) {
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_string = !in_string;
        if (line[i] == '#' && !in_string) return line.substr(0, i);
    }
    return line;
}

bool parse_number(const std::string& text, double& out) {
    std::istringstream ss(text);
    ss >> out;
    return static_cast<bool>(ss) && ss.eof();
}

}  // namespace

double SuiteConfig::number(const std::string& key, double fallback) const {
    const auto it = numbers.find(key);
    return it == numbers.end() ? fallback : it->second;
}

int SuiteConfig::integer(const std::string& key, int fallback) const {
    return static_cast<int>(number(key, fallback));
}

std::string SuiteConfig::text(const std::string& key, const std::string& fallback) const {
    const auto it = strings.find(key);
    return it == strings.end() ? fallback : it->second;
}

std::vector<int> SuiteConfig::int_array(const std::string& key, std::vector<int> fallback) const {
    const auto it = arrays.find(key);
    if (it == arrays.end()) return fallback;
    std::vector<int> out;
    out.reserve(it->second.size());
    for (double v : it->second) out.push_back(static_cast<int>(v));
    return out;
}

double SuiteConfig::tolerance() const {
    const auto it = numbers.find("tolerance");
    if (it == numbers.end()) throw ConfigError("suite '" + id + "': missing tolerance");
    if (!(it->second > 0.0)) throw ConfigError("suite '" + id + "': tolerance must be > 0");
    return it->second;
}

bool SuiteConfig::absolute_mode() const { return text("mode", "rel") == "abs"; }

CampaignConfig CampaignConfig::parse(const std::string& text) {
    CampaignConfig config;
    config.suites.clear();
    SuiteConfig* current = nullptr;

    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        const std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("line " + std::to_string(line_no) + ": bad table header");
            const std::string name = trim(line.substr(1, line.size() - 2));
            if (name.rfind("suite.", 0) != 0)
                throw ConfigError("line " + std::to_string(line_no) + ": unknown table '" + name + "'");
            SuiteConfig suite;
            suite.id = name.substr(6);
            if (suite.id.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty suite id");
            config.suites.push_back(std::move(suite));
            current = &config.suites.back();
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": empty key or value");

        if (current == nullptr) {
            if (key == "seed") {
                config.seed = std::stoull(value);
            } else if (key == "jobs") {
                config.jobs = std::stoi(value);
            } else if (key == "not_converged") {
                const std::string v = trim(value);
                if (v == "\"fail\"") config.fail_on_not_converged = true;
                else if (v == "\"warn\"") config.fail_on_not_converged = false;
                else throw ConfigError("not_converged must be \"fail\" or \"warn\"");
            } else if (key == "output") {
                if (value.size() < 2 || value.front() != '"' || value.back() != '"')
                    throw ConfigError("output must be a quoted string");
                config.output = value.substr(1, value.size() - 2);
            } else if (key == "format") {
                if (value == "\"json\"") config.format = "json";
                else if (value == "\"csv\"") config.format = "csv";
                else throw ConfigError("format must be \"json\" or \"csv\"");
            } else {
                throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
            }
            continue;
        }

        if (!value.empty() && value.front() == '"') {
            if (value.size() < 2 || value.back() != '"')
                throw ConfigError("line " + std::to_string(line_no) + ": unterminated string");
            current->strings[key] = value.substr(1, value.size() - 2);
        } else if (value.front() == '[') {
            if (value.back() != ']') throw ConfigError("line " + std::to_string(line_no) + ": unterminated array");
            std::vector<double> items;
            std::string body = value.substr(1, value.size() - 2);
            std::istringstream bs(body);
            std::string piece;
            while (std::getline(bs, piece, ',')) {
                const std::string p = trim(piece);
                if (p.empty()) continue;
                double v = 0.0;
                if (!parse_number(p, v))
                    throw ConfigError("line " + std::to_string(line_no) + ": bad array item '" + p + "'");
                items.push_back(v);
            }
            current->arrays[key] = std::move(items);
        } else if (value == "true" || value == "false") {
            current->numbers[key] = (value == "true") ? 1.0 : 0.0;
        } else {
            double v = 0.0;
            if (!parse_number(value, v))
                throw ConfigError("line " + std::to_string(line_no) + ": bad value '" + value + "'");
            current->numbers[key] = v;
        }
    }
    return config;
}

CampaignConfig CampaignConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::not_converged: return "not_converged";
        case CheckStatus::domain_skip: return "domain_skip";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// Reports

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json record_json(const CheckRecord& r, bool include_timing) {
    ordered_json j;
    j["params"] = r.params;
    j["lhs_re"] = r.lhs.real();
    j["lhs_im"] = r.lhs.imag();
    j["rhs_re"] = r.rhs.real();
    j["rhs_im"] = r.rhs.imag();
    j["abs_err"] = r.abs_err;
    j["rel_err"] = r.rel_err;
    j["degree_or_points"] = r.degree_or_points;
    if (include_timing) j["wall_ms"] = r.wall_ms;
    j["status"] = status_name(r.status);
    return j;
}

}  // namespace

std::string to_json(const CampaignResult& result, bool include_timing) {
    ordered_json root;
    root["seed"] = result.seed;
    root["summary"] = {{"checks", result.checks},
                       {"pass", result.passes},
                       {"fail", result.fails},
                       {"not_converged", result.not_converged},
                       {"domain_skip", result.skips}};
    if (include_timing) root["wall_ms"] = result.wall_ms;
    root["metadata"] = result.metadata;
    root["suites"] = ordered_json::array();
    for (const SuiteResult& suite : result.suites) {
        ordered_json s;
        s["id"] = suite.id;
        s["tag"] = suite.tag;
        s["tolerance"] = suite.tolerance;
        s["mode"] = suite.absolute_mode ? "abs" : "rel";
        s["pass"] = suite.passes;
        s["fail"] = suite.fails;
        s["not_converged"] = suite.not_converged;
        s["domain_skip"] = suite.skips;
        if (include_timing) s["wall_ms"] = suite.wall_ms;
        s["checks"] = ordered_json::array();
        for (const CheckRecord& r : suite.records) s["checks"].push_back(record_json(r, include_timing));
        root["suites"].push_back(std::move(s));
    }
    return root.dump(2) + "\n";
}

std::string to_csv(const CampaignResult& result, bool include_timing) {
    std::ostringstream out;
    out.precision(17);
    out << "suite,index,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,degree_or_points,status";
    if (include_timing) out << ",wall_ms";
    out << "\n";
    for (const SuiteResult& suite : result.suites) {
        for (std::size_t i = 0; i < suite.records.size(); ++i) {
            const CheckRecord& r = suite.records[i];
            std::string quoted = r.params;
            std::replace(quoted.begin(), quoted.end(), ',', ';');
            out << suite.id << ',' << i << ',' << '"' << quoted << '"' << ',' << r.lhs.real() << ','
                << r.lhs.imag() << ',' << r.rhs.real() << ',' << r.rhs.imag() << ',' << r.abs_err
                << ',' << r.rel_err << ',' << r.degree_or_points << ',' << status_name(r.status);
            if (include_timing) out << ',' << r.wall_ms;
            out << "\n";
        }
    }
    return out.str();
}

std::string summary_lines(const CampaignResult& result) {
    std::ostringstream out;
    for (const SuiteResult& suite : result.suites) {
        const bool ok = suite.fails == 0 && suite.not_converged == 0;
        out << (ok ? "[ ok ]" : "[FAIL]") << ' ' << suite.id << "  checks=" << suite.records.size()
            << " pass=" << suite.passes << " fail=" << suite.fails;
        if (suite.not_converged > 0) out << " not_converged=" << suite.not_converged;
        if (suite.skips > 0) out << " domain_skip=" << suite.skips;
        out << "\n";
    }
    out << "total: " << result.checks << " checks, " << result.passes << " pass, " << result.fails
        << " fail, " << result.not_converged << " not_converged, " << result.skips
        << " domain_skip\n";
    return out.str();
}

}  // namespace h2d::harness
