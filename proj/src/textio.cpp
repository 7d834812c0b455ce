#include "lsgo/textio.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lsgo/errors.hpp"

namespace lsgo {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw DomainError("format_double failed");
    return std::string(buf, ptr);
}

double parse_double(const std::string& s) {
    double v = 0.0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e) throw DomainError("not a number: '" + s + "'");
    return v;
}

std::string format_vector(const vector_t& v) {
    std::string out;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += format_double(v[i]);
    }
    return out;
}

vector_t parse_vector(const std::string& s) {
    std::istringstream in(s);
    std::vector<double> vals;
    std::string tok;
    while (in >> tok) vals.push_back(parse_double(tok));
    vector_t v(static_cast<Eigen::Index>(vals.size()));
    for (std::size_t i = 0; i < vals.size(); ++i) v[static_cast<Eigen::Index>(i)] = vals[i];
    return v;
}

std::string vector_digest(const vector_t& v) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto feed = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ull;
        }
    };
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        feed(format_double(v[i]));
        feed(";");
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            if (!trim(cur).empty()) out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty()) out.push_back(trim(cur));
    return out;
}

KeyValueDoc KeyValueDoc::parse(const std::string& text) {
    KeyValueDoc doc;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("bad config line: '" + line + "'");
        doc.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return doc;
}

KeyValueDoc KeyValueDoc::load(const std::string& path) { return parse(read_file(path)); }

void KeyValueDoc::set(const std::string& key, const std::string& value) {
    auto it = index_.find(key);
    if (it != index_.end()) {
        entries_[it->second].second = value;
    } else {
        index_[key] = entries_.size();
        entries_.emplace_back(key, value);
    }
}

bool KeyValueDoc::has(const std::string& key) const { return index_.count(key) > 0; }

std::string KeyValueDoc::get(const std::string& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) throw ConfigError("missing config key: " + key);
    return entries_[it->second].second;
}

std::string KeyValueDoc::get_or(const std::string& key, const std::string& def) const {
    return has(key) ? get(key) : def;
}

long long KeyValueDoc::get_int(const std::string& key, long long def) const {
    if (!has(key)) return def;
    const std::string s = get(key);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ConfigError("key '" + key + "' is not an integer: '" + s + "'");
    return v;
}

double KeyValueDoc::get_real(const std::string& key, double def) const {
    if (!has(key)) return def;
    return parse_double(get(key));
}

bool KeyValueDoc::get_bool(const std::string& key, bool def) const {
    if (!has(key)) return def;
    const std::string s = get(key);
    if (s == "true" || s == "on" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "off" || s == "0" || s == "no") return false;
    throw ConfigError("key '" + key + "' is not a boolean: '" + s + "'");
}

std::vector<std::string> KeyValueDoc::get_list(const std::string& key) const {
    if (!has(key)) return {};
    return split_list(get(key));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write file: " + path);
    out << contents;
    if (!out) throw ConfigError("write failed: " + path);
}

}  // namespace lsgo
