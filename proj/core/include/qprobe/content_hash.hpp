// content_hash.hpp: SHA-256 digests used as reproducibility and cache keys.

#pragma once

#include <string>
#include <string_view>

namespace qprobe {

// Lower-case hex SHA-256 of the bytes of text.
std::string sha256_hex(std::string_view text);

// Shortest round-trip decimal form of x, used when hashing numeric keys.
std::string canonical_number(double x);

}  // namespace qprobe
