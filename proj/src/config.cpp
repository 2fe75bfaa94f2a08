#include "hartree/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace hartree {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

bool valid_key(const std::string& k) {
    if (k.empty()) return false;
    for (char c : k) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

}  // namespace

ConfigError::ConfigError(int line_, const std::string& message)
    : std::runtime_error(line_ > 0 ? "config line " + std::to_string(line_) + ": " + message
                                   : "config: " + message),
      line(line_) {}

RunConfig RunConfig::parse(const std::string& text) {
    RunConfig cfg;
    cfg.source_ = text;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(line_no, "expected \"key = value\", got \"" + trim(raw) + "\"");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (!valid_key(key))
            throw ConfigError(line_no, "invalid key \"" + key + "\"");
        if (value.empty())
            throw ConfigError(line_no, "empty value for key \"" + key + "\"");
        if (auto it = cfg.entries_.find(key); it != cfg.entries_.end())
            throw ConfigError(line_no, "duplicate key \"" + key + "\" (first set on line " +
                                           std::to_string(it->second.line) + ")");
        cfg.entries_[key] = Entry{value, line_no};
    }
    cfg.last_line_ = line_no;
    return cfg;
}

RunConfig RunConfig::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError(0, "cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

bool RunConfig::has(const std::string& key) const { return entries_.count(key) != 0; }

int RunConfig::line_of(const std::string& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second.line;
}

const RunConfig::Entry& RunConfig::lookup(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end())
        throw ConfigError(0, "missing required key \"" + key + "\" (config ends at line " +
                                 std::to_string(last_line_) + ")");
    return it->second;
}

Rational RunConfig::rational(const std::string& key) const {
    const Entry& e = lookup(key);
    auto q = parse_rational(e.value);
    if (!q)
        throw ConfigError(e.line, "malformed rational for key \"" + key + "\": \"" + e.value + "\"");
    return *q;
}

Rational RunConfig::rational_or(const std::string& key, const Rational& dflt) const {
    return has(key) ? rational(key) : dflt;
}

long RunConfig::integer(const std::string& key) const {
    const Entry& e = lookup(key);
    Rational q = rational(key);
    if (q.get_den() != 1 || !q.get_num().fits_slong_p())
        throw ConfigError(e.line, "key \"" + key + "\" needs an integer, got \"" + e.value + "\"");
    return q.get_num().get_si();
}

long RunConfig::integer_or(const std::string& key, long dflt) const {
    return has(key) ? integer(key) : dflt;
}

double RunConfig::number(const std::string& key) const { return to_double(rational(key)); }

double RunConfig::number_or(const std::string& key, double dflt) const {
    return has(key) ? number(key) : dflt;
}

std::string RunConfig::text(const std::string& key) const { return lookup(key).value; }

std::string RunConfig::text_or(const std::string& key, const std::string& dflt) const {
    return has(key) ? text(key) : dflt;
}

bool RunConfig::flag_or(const std::string& key, bool dflt) const {
    if (!has(key)) return dflt;
    const Entry& e = lookup(key);
    if (e.value == "true" || e.value == "1") return true;
    if (e.value == "false" || e.value == "0") return false;
    throw ConfigError(e.line, "key \"" + key + "\" needs true/false, got \"" + e.value + "\"");
}

std::vector<Rational> RunConfig::rational_list(const std::string& key) const {
    const Entry& e = lookup(key);
    std::istringstream in(e.value);
    std::vector<Rational> out;
    std::string tok;
    while (in >> tok) {
        auto q = parse_rational(tok);
        if (!q)
            throw ConfigError(e.line,
                              "malformed rational \"" + tok + "\" in list for key \"" + key + "\"");
        out.push_back(*q);
    }
    if (out.empty()) throw ConfigError(e.line, "empty list for key \"" + key + "\"");
    return out;
}

void RunConfig::require_known(const std::vector<std::string>& allowed) const {
    const Entry* worst = nullptr;
    const std::string* worst_key = nullptr;
    for (const auto& [key, entry] : entries_) {
        if (std::find(allowed.begin(), allowed.end(), key) != allowed.end()) continue;
        if (!worst || entry.line < worst->line) {
            worst = &entry;
            worst_key = &key;
        }
    }
    if (worst) throw ConfigError(worst->line, "unknown key \"" + *worst_key + "\"");
}

void RunConfig::require(const std::vector<std::string>& required) const {
    for (const auto& key : required) lookup(key);
}

}  // namespace hartree
