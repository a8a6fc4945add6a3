#ifndef NTORRENT_BYTES_HPP
#define NTORRENT_BYTES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ntorrent {

using Bytes = std::vector<uint8_t>;

Bytes toBytes(std::string_view s);

std::string toHex(const uint8_t* data, size_t length);
std::string toHex(const Bytes& b);

} // namespace ntorrent

#endif // NTORRENT_BYTES_HPP
