#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace hartree {

inline constexpr const char* kToolName = "hartree-lab";
inline constexpr const char* kToolVersion = "1.0.0";

/** One named check.  key is a condition tag or invariant name; measured and
 *  tolerance are always present (exact checks report residual 0, tol 0). */
struct CheckRow {
    std::string key;
    bool pass = false;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct Provenance {
    std::uint64_t seed = 0;
    std::string config_hash;  // fnv1a_hex of the config text
};

/** Ordered pass/fail report with JSON (machine) and CSV (table) emission.
 *  Keys are unique: adding a duplicate throws, so a finished report carries
 *  each check exactly once. */
class Report {
  public:
    Report(std::string title, Provenance prov);

    void add(CheckRow row);
    void add(const std::string& key, bool pass, double measured, double tolerance,
             const std::string& detail = "");

    bool all_pass() const;
    std::size_t size() const { return rows_.size(); }
    const std::vector<CheckRow>& rows() const { return rows_; }
    const CheckRow& row(const std::string& key) const;

    std::string json() const;
    std::string csv() const;

  private:
    std::string title_;
    Provenance prov_;
    std::vector<CheckRow> rows_;
    std::set<std::string> keys_;
};

/** 64-bit FNV-1a of the bytes, as 16 hex digits. */
std::string fnv1a_hex(const std::string& data);

/** Shortest decimal that round-trips the double (deterministic). */
std::string format_double(double x);

/** Write-to-temp-then-rename so readers never see a partial file. */
void atomic_write(const std::string& path, const std::string& content);

}  // namespace hartree
