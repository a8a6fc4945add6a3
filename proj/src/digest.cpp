#include "ntorrent/digest.hpp"

#include <openssl/evp.h>

#include <memory>
#include <stdexcept>

namespace ntorrent {

Sha256Digest
sha256(const uint8_t* data, size_t length)
{
  Sha256Digest digest;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (ctx == nullptr)
    throw std::runtime_error("sha256: EVP_MD_CTX_new failed");

  unsigned int written = 0;
  if (EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data, length) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest.data(), &written) != 1 ||
      written != digest.size()) {
    throw std::runtime_error("sha256: digest computation failed");
  }
  return digest;
}

Sha256Digest
sha256(const Bytes& b)
{
  return sha256(b.data(), b.size());
}

} // namespace ntorrent
