#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mdastyl {

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 1469598103934665603ULL);

/// Deterministic Fisher-Yates over [0, n): mt19937_64 seeded with `seed`,
/// bounded draws by rejection sampling. Identical on every platform.
std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed);

std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

/// printf-style "%.*f" with "-0.00" normalized to "0.00".
std::string format_fixed(double value, int precision);

/// Shortest round-trip decimal ("%.17g").
std::string format_exact(double value);

/// Parses a double, throwing FormatError with `what` on failure.
double parse_double(std::string_view s, std::string_view what);

std::string hex64(std::uint64_t v);

}  // namespace mdastyl
