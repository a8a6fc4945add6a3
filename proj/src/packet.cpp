#include "ntorrent/packet.hpp"

namespace ntorrent {

std::string_view
to_string(ContentType t)
{
  switch (t) {
    case ContentType::TorrentSegment:
      return "torrent-segment";
    case ContentType::FileManifest:
      return "file-manifest";
    case ContentType::DataPacket:
      return "data-packet";
  }
  return "unknown";
}

Interest::Interest(Name name, uint32_t nonce)
  : m_name(std::move(name))
  , m_nonce(nonce)
{
  if (!m_name.isFullName())
    throw std::invalid_argument("interest name must end in a digest component");
}

Data::Data(Name wireName, ContentType contentType, Bytes payload)
  : m_wireName(std::move(wireName))
  , m_contentType(contentType)
  , m_payload(std::move(payload))
{
  if (m_wireName.empty())
    throw std::invalid_argument("data name must be nonempty");
  if (m_wireName.isFullName())
    throw std::invalid_argument("data carries a wire name, not a digest-terminated one");
}

Bytes
encodeName(const Name& name)
{
  Bytes value;
  for (const auto& component : name.components())
    tlv::appendBlock(value, tlv::kComponent,
                     reinterpret_cast<const uint8_t*>(component.data()), component.size());

  Bytes out;
  tlv::appendBlock(out, tlv::kName, value);
  return out;
}

Name
decodeName(tlv::Reader& reader)
{
  tlv::Reader body = reader.readBlock(tlv::kName);
  Name name;
  while (!body.atEnd()) {
    Bytes component = body.readValue(tlv::kComponent);
    name.append(std::string_view(reinterpret_cast<const char*>(component.data()), component.size()));
  }
  return name;
}

Bytes
encodePacket(const Interest& interest)
{
  Bytes body = encodeName(interest.name());
  tlv::appendUintBlock(body, tlv::kNonce, interest.nonce(), 4);

  Bytes out;
  tlv::appendBlock(out, tlv::kInterest, body);
  return out;
}

Bytes
encodePacket(const Data& data)
{
  Bytes body = encodeName(data.wireName());
  tlv::appendUintBlock(body, tlv::kContentType, static_cast<uint64_t>(data.contentType()), 1);
  tlv::appendBlock(body, tlv::kPayload, data.payload());

  Bytes out;
  tlv::appendBlock(out, tlv::kData, body);
  return out;
}

Packet
decodePacket(const Bytes& wire)
{
  try {
    tlv::Reader top(wire);
    uint8_t type = top.peekType();

    if (type == tlv::kInterest) {
      tlv::Reader body = top.readBlock(tlv::kInterest);
      top.expectEnd();
      Name name = decodeName(body);
      auto nonce = static_cast<uint32_t>(body.readUintBlock(tlv::kNonce, 4));
      body.expectEnd();
      return Interest(std::move(name), nonce);
    }

    if (type == tlv::kData) {
      tlv::Reader body = top.readBlock(tlv::kData);
      top.expectEnd();
      Name name = decodeName(body);
      uint64_t contentType = body.readUintBlock(tlv::kContentType, 1);
      if (contentType > static_cast<uint64_t>(ContentType::DataPacket))
        throw MalformedPacket("unknown content type " + std::to_string(contentType));
      Bytes payload = body.readValue(tlv::kPayload);
      body.expectEnd();
      return Data(std::move(name), static_cast<ContentType>(contentType), std::move(payload));
    }

    throw MalformedPacket("unknown packet type " + std::to_string(type));
  }
  catch (const tlv::Error& e) {
    throw MalformedPacket(e.what());
  }
  catch (const std::invalid_argument& e) {
    throw MalformedPacket(e.what());
  }
}

Sha256Digest
computeImplicitDigest(const Bytes& wire)
{
  return sha256(wire);
}

Name
fullName(const Data& data)
{
  Name name = data.wireName();
  name.appendDigest(computeImplicitDigest(encodePacket(data)));
  return name;
}

} // namespace ntorrent
