#ifndef CHUNKTX_UTIL_HPP
#define CHUNKTX_UTIL_HPP

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chunktx {

// Splits on a single delimiter, keeping empty fields.
std::vector<std::string_view> split(std::string_view s, char delim);
std::string_view trim(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Shortest decimal form that round-trips through from_chars.
std::string fmt_double(double v);
double parse_double(std::string_view s);

// Fixed-precision percent rendering used in report tables.
std::string fmt_pct(double fraction);

std::uint64_t fnv1a64(std::string_view s);

// splitmix64: portable, fully specified, good enough for shuffling.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  std::size_t below(std::size_t n);  // uniform in [0, n)
};

// Named sub-seed so each consumer of randomness gets its own stream.
std::uint64_t sub_seed(std::uint64_t base, std::string_view name);

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = rng.below(i);
    std::swap(v[i - 1], v[j]);
  }
}

// k distinct indices out of [0, n), in ascending order.
std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k, Rng& rng);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, std::string_view content);

// Structured one-line log record: "event k1=v1 k2=v2".
void log_kv(std::ostream& os, std::string_view event,
            std::initializer_list<std::pair<std::string_view, std::string>> fields);

}  // namespace chunktx

#endif
