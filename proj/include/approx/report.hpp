#pragma once

// Report plumbing: atomic text-file writes (temp file + rename, so partial
// outputs are never observed) and the line-oriented `key = value` experiment
// config grammar.
//
// Config grammar: one `key = value` per line; `#` starts a comment; blank
// lines ignored; keys and values are trimmed; repeated keys keep the last
// value. Node sets use the "z:m,z:m" mini-language.

#include <map>
#include <optional>
#include <string>

namespace approx {

// writes content to path atomically; throws std::runtime_error on I/O failure
void write_file_atomic(const std::string& path, const std::string& content);

class Config {
public:
    static Config parse_file(const std::string& path);
    static Config parse_text(const std::string& text);   // throws with line info

    bool has(const std::string& key) const { return kv_.count(key) > 0; }
    std::string get(const std::string& key) const;                      // throws if missing
    std::string get_or(const std::string& key, const std::string& d) const;
    double get_double(const std::string& key) const;
    int get_int(const std::string& key) const;
    std::optional<std::string> maybe(const std::string& key) const;

    const std::map<std::string, std::string>& entries() const { return kv_; }

private:
    std::map<std::string, std::string> kv_;
};

} // namespace approx
