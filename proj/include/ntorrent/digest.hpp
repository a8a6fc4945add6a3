#ifndef NTORRENT_DIGEST_HPP
#define NTORRENT_DIGEST_HPP

#include "ntorrent/bytes.hpp"

#include <array>

namespace ntorrent {

using Sha256Digest = std::array<uint8_t, 32>;

Sha256Digest sha256(const uint8_t* data, size_t length);
Sha256Digest sha256(const Bytes& b);

} // namespace ntorrent

#endif // NTORRENT_DIGEST_HPP
