#include "hartree/report.hpp"

#include <json.hpp>

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace hartree {

Report::Report(std::string title, Provenance prov) : title_(std::move(title)), prov_(prov) {}

void Report::add(CheckRow row) {
    if (row.key.empty()) throw std::invalid_argument("report: empty check key");
    if (!keys_.insert(row.key).second)
        throw std::invalid_argument("report: duplicate check key \"" + row.key + "\"");
    rows_.push_back(std::move(row));
}

void Report::add(const std::string& key, bool pass, double measured, double tolerance,
                 const std::string& detail) {
    add(CheckRow{key, pass, measured, tolerance, detail});
}

bool Report::all_pass() const {
    for (const auto& r : rows_)
        if (!r.pass) return false;
    return true;
}

const CheckRow& Report::row(const std::string& key) const {
    for (const auto& r : rows_)
        if (r.key == key) return r;
    throw std::out_of_range("report: no check named \"" + key + "\"");
}

std::string Report::json() const {
    nlohmann::ordered_json doc;
    doc["title"] = title_;
    doc["tool"] = std::string(kToolName) + " " + kToolVersion;
    doc["pass"] = all_pass();
    nlohmann::ordered_json checks;
    for (const auto& r : rows_) {
        nlohmann::ordered_json c;
        c["pass"] = r.pass;
        c["measured"] = r.measured;
        c["tolerance"] = r.tolerance;
        if (!r.detail.empty()) c["detail"] = r.detail;
        checks[r.key] = std::move(c);
    }
    doc["checks"] = std::move(checks);
    nlohmann::ordered_json prov;
    prov["version"] = std::string(kToolName) + " " + kToolVersion;
    prov["seed"] = prov_.seed;
    prov["config_hash"] = prov_.config_hash;
    doc["provenance"] = std::move(prov);
    return doc.dump(2) + "\n";
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string Report::csv() const {
    std::string out = "check,pass,measured,tolerance,detail\n";
    for (const auto& r : rows_) {
        out += csv_escape(r.key);
        out += r.pass ? ",pass," : ",FAIL,";
        out += format_double(r.measured);
        out += ',';
        out += format_double(r.tolerance);
        out += ',';
        out += csv_escape(r.detail);
        out += '\n';
    }
    return out;
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

std::string format_double(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc()) throw std::runtime_error("format_double: to_chars failed");
    return std::string(buf, end);
}

void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open \"" + tmp + "\" for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw std::runtime_error("write to \"" + tmp + "\" failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        int err = errno;
        std::remove(tmp.c_str());
        throw std::runtime_error("rename \"" + tmp + "\" -> \"" + path +
                                 "\" failed: " + std::strerror(err));
    }
}

}  // namespace hartree
