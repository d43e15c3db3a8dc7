#include "approx/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace approx {

void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("write_file_atomic: cannot open " + tmp);
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write_file_atomic: short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("write_file_atomic: rename to " + path + " failed");
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
}

Config Config::parse_text(const std::string& text) {
    Config c;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config: line " + std::to_string(lineno) +
                                     ": expected `key = value`, got: " + t);
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        if (key.empty())
            throw std::runtime_error("config: line " + std::to_string(lineno) + ": empty key");
        c.kv_[key] = val;
    }
    return c;
}

std::string Config::get(const std::string& key) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) throw std::runtime_error("config: missing key `" + key + "`");
    return it->second;
}

std::string Config::get_or(const std::string& key, const std::string& d) const {
    auto it = kv_.find(key);
    return it == kv_.end() ? d : it->second;
}

double Config::get_double(const std::string& key) const {
    const std::string v = get(key);
    std::size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size())
        throw std::runtime_error("config: key `" + key + "`: not a number: " + v);
    return d;
}

int Config::get_int(const std::string& key) const {
    const std::string v = get(key);
    std::size_t pos = 0;
    int d = std::stoi(v, &pos);
    if (pos != v.size())
        throw std::runtime_error("config: key `" + key + "`: not an integer: " + v);
    return d;
}

std::optional<std::string> Config::maybe(const std::string& key) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) return std::nullopt;
    return it->second;
}

} // namespace approx
