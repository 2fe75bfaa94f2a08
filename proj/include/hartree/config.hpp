#pragma once

#include "hartree/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hartree {

/** Error pinned to a config line (line 0 = whole file / end of file). */
struct ConfigError : std::runtime_error {
    int line;
    ConfigError(int line_, const std::string& message);
};

/** Flat "key = value" file with # comments and exact-rational values.  Every
 *  entry remembers the line it came from, so malformed values, unknown keys
 *  and duplicates are all reported with their source line.  Values are kept
 *  as raw text; the typed getters convert on demand (rationals never round
 *  through floating point). */
class RunConfig {
  public:
    static RunConfig parse(const std::string& text);
    static RunConfig load_file(const std::string& path);

    bool has(const std::string& key) const;
    int line_of(const std::string& key) const;  // 0 when absent

    Rational rational(const std::string& key) const;
    Rational rational_or(const std::string& key, const Rational& dflt) const;
    long integer(const std::string& key) const;
    long integer_or(const std::string& key, long dflt) const;
    double number(const std::string& key) const;  // exact rational, then to_double
    double number_or(const std::string& key, double dflt) const;
    std::string text(const std::string& key) const;
    std::string text_or(const std::string& key, const std::string& dflt) const;
    bool flag_or(const std::string& key, bool dflt) const;  // true/false/1/0
    /** Whitespace-separated list of rationals. */
    std::vector<Rational> rational_list(const std::string& key) const;

    /** Rejects the first key (in line order) outside `allowed`. */
    void require_known(const std::vector<std::string>& allowed) const;
    /** Rejects on the first absent required key. */
    void require(const std::vector<std::string>& required) const;

    /** Raw text the config was parsed from, for provenance hashing. */
    const std::string& source_text() const { return source_; }

  private:
    struct Entry {
        std::string value;
        int line = 0;
    };
    const Entry& lookup(const std::string& key) const;

    std::map<std::string, Entry> entries_;
    std::string source_;
    int last_line_ = 0;
};

}  // namespace hartree
