#ifndef NTORRENT_TLV_HPP
#define NTORRENT_TLV_HPP

#include "ntorrent/bytes.hpp"

#include <stdexcept>

namespace ntorrent::tlv {

// Every block is type (1 byte) + length (4 bytes, big-endian) + value.

// packet-level types
constexpr uint8_t kInterest = 0x05;
constexpr uint8_t kData = 0x06;
constexpr uint8_t kName = 0x01;
constexpr uint8_t kComponent = 0x02;
constexpr uint8_t kNonce = 0x0A;
constexpr uint8_t kContentType = 0x14;
constexpr uint8_t kPayload = 0x15;

// object-level types carried inside Data payloads
constexpr uint8_t kTorrentFileSegment = 0x80;
constexpr uint8_t kSegmentNumber = 0x81;
constexpr uint8_t kCatalogEntry = 0x82;
constexpr uint8_t kNextSegmentPtr = 0x83;

constexpr uint8_t kFileManifest = 0x90;
constexpr uint8_t kManifestNumber = 0x91;
constexpr uint8_t kFilePath = 0x92;
constexpr uint8_t kSubCatalogEntry = 0x93;
constexpr uint8_t kNextManifestPtr = 0x94;

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

void appendBlock(Bytes& out, uint8_t type, const uint8_t* value, size_t length);
void appendBlock(Bytes& out, uint8_t type, const Bytes& value);

/// Appends a block whose value is a fixed-width big-endian unsigned integer.
void appendUintBlock(Bytes& out, uint8_t type, uint64_t value, size_t width);

/** \brief Sequential cursor over a run of TLV blocks.
 *
 *  All read operations throw tlv::Error on type mismatch, length overrun,
 *  or truncated input. expectEnd() rejects trailing bytes.
 */
class Reader
{
public:
  Reader(const uint8_t* data, size_t length);
  explicit Reader(const Bytes& b);

  bool atEnd() const;
  uint8_t peekType() const;

  /// Consumes one block of the given type and returns a reader over its value.
  Reader readBlock(uint8_t expectedType);

  /// Consumes one block of the given type and copies out its value.
  Bytes readValue(uint8_t expectedType);

  /// Consumes one block whose value must be exactly `width` bytes, big-endian.
  uint64_t readUintBlock(uint8_t expectedType, size_t width);

  void expectEnd() const;

  size_t remaining() const;
  const uint8_t* position() const;

private:
  const uint8_t* m_pos;
  const uint8_t* m_end;
};

} // namespace ntorrent::tlv

#endif // NTORRENT_TLV_HPP
