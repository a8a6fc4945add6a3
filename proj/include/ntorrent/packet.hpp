#ifndef NTORRENT_PACKET_HPP
#define NTORRENT_PACKET_HPP

#include "ntorrent/name.hpp"
#include "ntorrent/tlv.hpp"

#include <stdexcept>
#include <variant>

namespace ntorrent {

class MalformedPacket : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

enum class ContentType : uint8_t {
  TorrentSegment = 0,
  FileManifest = 1,
  DataPacket = 2,
};

std::string_view to_string(ContentType t);

/** \brief Request packet: a full (digest-terminated) name plus a nonce.
 */
class Interest
{
public:
  Interest(Name name, uint32_t nonce);

  const Name& name() const { return m_name; }
  uint32_t nonce() const { return m_nonce; }

  bool operator==(const Interest&) const = default;

private:
  Name m_name;
  uint32_t m_nonce;
};

/** \brief Response packet: wire name, content type, opaque payload.
 *
 *  The full name appends the implicit digest of the encoded packet.
 */
class Data
{
public:
  Data(Name wireName, ContentType contentType, Bytes payload);

  const Name& wireName() const { return m_wireName; }
  ContentType contentType() const { return m_contentType; }
  const Bytes& payload() const { return m_payload; }

  bool operator==(const Data&) const = default;

private:
  Name m_wireName;
  ContentType m_contentType;
  Bytes m_payload;
};

using Packet = std::variant<Interest, Data>;

/// Name block: one component block per element, in order.
Bytes encodeName(const Name& name);

/// Consumes one name block from the cursor; throws tlv::Error / std::invalid_argument.
Name decodeName(tlv::Reader& reader);

Bytes encodePacket(const Interest& interest);
Bytes encodePacket(const Data& data);

/// Inverse of encodePacket on its image; throws MalformedPacket on anything else.
Packet decodePacket(const Bytes& wire);

/// SHA-256 over an encoded packet.
Sha256Digest computeImplicitDigest(const Bytes& wire);

/// wire name + implicit-digest component of the encoded packet
Name fullName(const Data& data);

} // namespace ntorrent

#endif // NTORRENT_PACKET_HPP
