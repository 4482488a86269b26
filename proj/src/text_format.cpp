#include "ncpark/text_format.hpp"

#include <charconv>
#include <cstdio>

#include "ncpark/errors.hpp"

namespace ncpark {

std::string join_ints(std::span<const int> values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

namespace {

int parse_one_int(std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw MalformedInput("not an integer: '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text, char sep) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(parse_one_int(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::vector<int>> parse_delimited_groups(std::string_view text, char open, char close) {
  std::vector<std::vector<int>> groups;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != open) throw MalformedInput("expected '" + std::string(1, open) + "' in '" + std::string(text) + "'");
    auto end = text.find(close, pos);
    if (end == std::string_view::npos) throw MalformedInput("unterminated group in '" + std::string(text) + "'");
    groups.push_back(parse_int_list(text.substr(pos + 1, end - pos - 1)));
    pos = end + 1;
  }
  return groups;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

}  // namespace ncpark
