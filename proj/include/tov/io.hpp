#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tov {

// All numeric text output goes through these so artifacts are byte-stable.
// Reals use 17 significant digits, enough to round-trip any double.
std::string format_real(double v);
std::string format_int(std::int64_t v);

double parse_real(std::string_view s);
std::int64_t parse_int(std::string_view s);

std::vector<std::string> split_on(std::string_view s, char sep);
std::string trim(std::string_view s);

// Flat key=value sidecar files. Lines starting with '#' and blank lines are
// ignored on read; writes are sorted by key.
using KeyValues = std::map<std::string, std::string>;
void write_key_values(const std::filesystem::path& path, const KeyValues& kv);
KeyValues read_key_values(const std::filesystem::path& path);

void write_text_file(const std::filesystem::path& path, std::string_view text);
std::string read_text_file(const std::filesystem::path& path);

// FNV-1a over bytes; used for content-hash provenance and stage caching.
std::uint64_t content_hash(std::string_view bytes);
std::uint64_t content_hash_file(const std::filesystem::path& path);
std::string hash_hex(std::uint64_t h);

} // namespace tov
