#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsgo/types.hpp"

namespace lsgo {

// Canonical float text: shortest decimal that round-trips to the same bits.
std::string format_double(double v);
double parse_double(const std::string& s);

std::string format_vector(const vector_t& v);       // space-separated canonical floats
vector_t parse_vector(const std::string& s);

// FNV-1a over the canonical text of a vector; used as an integrity digest.
std::string vector_digest(const vector_t& v);

// Flat "key = value" document. Later keys override earlier ones; '#' starts a
// comment; array values are comma-separated.
class KeyValueDoc {
public:
    static KeyValueDoc parse(const std::string& text);
    static KeyValueDoc load(const std::string& path);

    bool has(const std::string& key) const;
    std::string get(const std::string& key) const;                       // throws ConfigError if absent
    std::string get_or(const std::string& key, const std::string& def) const;
    long long get_int(const std::string& key, long long def) const;
    double get_real(const std::string& key, double def) const;
    bool get_bool(const std::string& key, bool def) const;
    std::vector<std::string> get_list(const std::string& key) const;     // empty if absent

    void set(const std::string& key, const std::string& value);
    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

private:
    std::vector<std::pair<std::string, std::string>> entries_;  // insertion order kept
    std::map<std::string, std::size_t> index_;
};

std::vector<std::string> split_list(const std::string& s, char sep = ',');
std::string trim(const std::string& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace lsgo
