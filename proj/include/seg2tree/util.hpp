#ifndef SEG2TREE_UTIL_HPP
#define SEG2TREE_UTIL_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace seg2tree {

// Fixed 6-decimal float formatting. Every float in a serialized artifact goes
// through this so reruns are byte-identical.
std::string fmt6(double value);

// Percent with two decimals, for the text tables (e.g. 73.57).
std::string fmt_pct(double fraction);

// JSON string literal including quotes, with standard escaping.
std::string json_quote(const std::string& raw);

std::string read_file(const std::string& path);
std::vector<std::string> read_lines(const std::string& path);

// Write via temp file + rename in the same directory.
void atomic_write(const std::string& path, const std::string& content);

// FNV-1a 64-bit, as a stable config fingerprint (not cryptographic).
std::uint64_t fnv1a64(const std::string& data);
std::string hex64(std::uint64_t value);

// Runs fn(i) for i in [0, n) on up to `jobs` threads. Deterministic as long
// as fn(i) only touches slot i of preallocated output. Exceptions from
// workers are rethrown on the calling thread.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

std::vector<std::string> split(const std::string& text, char sep);
std::string trim(const std::string& text);

}  // namespace seg2tree

#endif  // SEG2TREE_UTIL_HPP
