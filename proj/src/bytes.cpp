#include "ntorrent/bytes.hpp"

namespace ntorrent {

Bytes
toBytes(std::string_view s)
{
  return Bytes(s.begin(), s.end());
}

std::string
toHex(const uint8_t* data, size_t length)
{
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(length * 2);
  for (size_t i = 0; i < length; ++i) {
    out.push_back(digits[data[i] >> 4]);
    out.push_back(digits[data[i] & 0x0f]);
  }
  return out;
}

std::string
toHex(const Bytes& b)
{
  return toHex(b.data(), b.size());
}

} // namespace ntorrent
