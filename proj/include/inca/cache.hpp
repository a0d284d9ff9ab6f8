#pragma once

#include <map>
#include <optional>
#include <string>

namespace inca {

// Append-only result cache keyed by strings (canonical code plus the budget
// or panel that produced the value). One record per line with a CRC32 over
// the hex payload; corrupt or truncated records are skipped on load. Writes
// append and flush, so a single writer can feed concurrent readers.
class ResultCache {
public:
    // Opens (and loads) the cache file; the file is created on first store.
    explicit ResultCache(std::string path);

    std::optional<std::string> lookup(const std::string& key) const;
    void store(const std::string& key, const std::string& value);

    std::size_t size() const { return entries_.size(); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::map<std::string, std::string> entries_;
};

}  // namespace inca
