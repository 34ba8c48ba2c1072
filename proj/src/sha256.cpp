#include "icbac/sha256.hpp"

#include <openssl/evp.h>

#include <stdexcept>

#include "icbac/types.hpp"

namespace icbac {

Digest sha256(const unsigned char* data, std::size_t len) {
  Digest out{};
  unsigned int out_len = 0;
  if (EVP_Digest(data, len, out.data(), &out_len, EVP_sha256(), nullptr) != 1 || out_len != 32)
    throw std::runtime_error("EVP_Digest(sha256) failed");
  return out;
}

Digest sha256(const std::string& data) {
  return sha256(reinterpret_cast<const unsigned char*>(data.data()), data.size());
}

std::string digest_hex(const Digest& d) { return to_hex(d.data(), d.size()); }

Digest digest_from_hex(const std::string& hex) {
  auto bytes = from_hex(hex);
  if (bytes.size() != 32) throw Error(ErrorCode::InvalidConfig, "digest hex must be 64 chars");
  Digest d{};
  std::copy(bytes.begin(), bytes.end(), d.begin());
  return d;
}

}  // namespace icbac
