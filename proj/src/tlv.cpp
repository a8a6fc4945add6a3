#include "ntorrent/tlv.hpp"

#include <limits>
#include <string>

namespace ntorrent::tlv {

namespace {

std::string
describeType(uint8_t type)
{
  static const char digits[] = "0123456789abcdef";
  return std::string("0x") + digits[type >> 4] + digits[type & 0x0f];
}

} // namespace

void
appendBlock(Bytes& out, uint8_t type, const uint8_t* value, size_t length)
{
  if (length > std::numeric_limits<uint32_t>::max())
    throw Error("TLV value too long for a 4-byte length");

  out.push_back(type);
  out.push_back(static_cast<uint8_t>(length >> 24));
  out.push_back(static_cast<uint8_t>(length >> 16));
  out.push_back(static_cast<uint8_t>(length >> 8));
  out.push_back(static_cast<uint8_t>(length));
  out.insert(out.end(), value, value + length);
}

void
appendBlock(Bytes& out, uint8_t type, const Bytes& value)
{
  appendBlock(out, type, value.data(), value.size());
}

void
appendUintBlock(Bytes& out, uint8_t type, uint64_t value, size_t width)
{
  if (width < 8 && (value >> (8 * width)) != 0)
    throw Error("integer does not fit the declared block width");

  Bytes be(width);
  for (size_t i = 0; i < width && i < 8; ++i)
    be[width - 1 - i] = static_cast<uint8_t>(value >> (8 * i));
  appendBlock(out, type, be);
}

Reader::Reader(const uint8_t* data, size_t length)
  : m_pos(data)
  , m_end(data + length)
{
}

Reader::Reader(const Bytes& b)
  : Reader(b.data(), b.size())
{
}

bool
Reader::atEnd() const
{
  return m_pos == m_end;
}

uint8_t
Reader::peekType() const
{
  if (atEnd())
    throw Error("expected a TLV block, found end of input");
  return *m_pos;
}

Reader
Reader::readBlock(uint8_t expectedType)
{
  if (atEnd())
    throw Error("expected block " + describeType(expectedType) + ", found end of input");
  if (static_cast<size_t>(m_end - m_pos) < 5)
    throw Error("truncated TLV header");

  uint8_t type = m_pos[0];
  if (type != expectedType)
    throw Error("expected block " + describeType(expectedType) + ", found " + describeType(type));

  uint32_t length = (static_cast<uint32_t>(m_pos[1]) << 24) |
                    (static_cast<uint32_t>(m_pos[2]) << 16) |
                    (static_cast<uint32_t>(m_pos[3]) << 8) |
                    static_cast<uint32_t>(m_pos[4]);
  m_pos += 5;
  if (static_cast<size_t>(m_end - m_pos) < length)
    throw Error("TLV length " + std::to_string(length) + " overruns the input");

  Reader value(m_pos, length);
  m_pos += length;
  return value;
}

Bytes
Reader::readValue(uint8_t expectedType)
{
  Reader value = readBlock(expectedType);
  return Bytes(value.m_pos, value.m_end);
}

uint64_t
Reader::readUintBlock(uint8_t expectedType, size_t width)
{
  Reader value = readBlock(expectedType);
  if (value.remaining() != width)
    throw Error("integer block " + describeType(expectedType) + " must be exactly " +
                std::to_string(width) + " bytes");

  uint64_t result = 0;
  for (const uint8_t* p = value.m_pos; p != value.m_end; ++p)
    result = (result << 8) | *p;
  return result;
}

void
Reader::expectEnd() const
{
  if (!atEnd())
    throw Error(std::to_string(remaining()) + " trailing bytes after the last block");
}

size_t
Reader::remaining() const
{
  return static_cast<size_t>(m_end - m_pos);
}

const uint8_t*
Reader::position() const
{
  return m_pos;
}

} // namespace ntorrent::tlv
