#include "inca/cache.hpp"

#include <array>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace inca {
namespace {

std::uint32_t crc32(const std::string& data) {
    static const auto table = [] {
        std::array<std::uint32_t, 256> t{};
        for (std::uint32_t i = 0; i < 256; ++i) {
            std::uint32_t c = i;
            for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
            t[i] = c;
        }
        return t;
    }();
    std::uint32_t c = 0xFFFFFFFFu;
    for (unsigned char ch : data) c = table[(c ^ ch) & 0xFF] ^ (c >> 8);
    return c ^ 0xFFFFFFFFu;
}

std::string hex_encode(const std::string& s) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(s.size() * 2);
    for (unsigned char c : s) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

std::optional<std::string> hex_decode(const std::string& s) {
    if (s.size() % 2) return std::nullopt;
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        return -1;
    };
    std::string out;
    out.reserve(s.size() / 2);
    for (std::size_t i = 0; i < s.size(); i += 2) {
        int hi = nibble(s[i]), lo = nibble(s[i + 1]);
        if (hi < 0 || lo < 0) return std::nullopt;
        out.push_back(static_cast<char>(hi * 16 + lo));
    }
    return out;
}

constexpr char kFieldSep = '\x1e';

}  // namespace

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag, crc_hex, payload_hex;
        if (!(ls >> tag >> crc_hex >> payload_hex) || tag != "r1") continue;
        std::uint32_t want;
        try {
            want = static_cast<std::uint32_t>(std::stoul(crc_hex, nullptr, 16));
        } catch (...) {
            continue;
        }
        if (crc32(payload_hex) != want) continue;  // corrupt or torn record
        auto payload = hex_decode(payload_hex);
        if (!payload) continue;
        auto sep = payload->find(kFieldSep);
        if (sep == std::string::npos) continue;
        entries_[payload->substr(0, sep)] = payload->substr(sep + 1);
    }
}

std::optional<std::string> ResultCache::lookup(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void ResultCache::store(const std::string& key, const std::string& value) {
    if (auto existing = lookup(key); existing && *existing == value) return;
    entries_[key] = value;
    std::string payload_hex = hex_encode(key + std::string(1, kFieldSep) + value);
    std::ostringstream rec;
    rec << "r1 " << std::hex << crc32(payload_hex) << ' ' << payload_hex << '\n';
    std::ofstream out(path_, std::ios::app);
    out << rec.str();
    out.flush();
}

}  // namespace inca
