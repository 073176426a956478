#pragma once

#include <string>
#include <string_view>

namespace refrank::digest {

/// SHA-256 of the input, as 64 lowercase hex characters.
/// Used for cache keys and provenance digests.
std::string sha256_hex(std::string_view data);

}  // namespace refrank::digest
