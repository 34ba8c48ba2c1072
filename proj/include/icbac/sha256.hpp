#pragma once

#include <array>
#include <cstddef>
#include <string>

namespace icbac {

using Digest = std::array<unsigned char, 32>;

Digest sha256(const unsigned char* data, std::size_t len);
Digest sha256(const std::string& data);

std::string digest_hex(const Digest& d);
Digest digest_from_hex(const std::string& hex);

inline constexpr Digest kZeroDigest{};

}  // namespace icbac
