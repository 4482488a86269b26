#pragma once

// Shared helpers for the canonical text forms used by cache files, golden
// tests and certificates.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ncpark {

std::string join_ints(std::span<const int> values, std::string_view sep);

/// Parses "1,1,3" into integers. Throws MalformedInput on junk.
std::vector<int> parse_int_list(std::string_view text, char sep = ',');

/// Parses "{1,3}{2}" (open='{', close='}') or "(1,2)(1,3)" into groups.
std::vector<std::vector<int>> parse_delimited_groups(std::string_view text, char open, char close);

/// 64-bit FNV-1a, used for cache integrity and certificate headers.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t value);

}  // namespace ncpark
