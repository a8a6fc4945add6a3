#include "ntorrent/torrent-objects.hpp"

namespace ntorrent {

namespace {

void
requireSingleComponent(const std::string& value, const char* what)
{
  if (value.empty())
    throw std::invalid_argument(std::string(what) + " must be nonempty");
  if (value.find('/') != std::string::npos)
    throw std::invalid_argument(std::string(what) + " must be a single name component");
}

void
appendNameBlock(Bytes& out, uint8_t type, const Name& name)
{
  tlv::appendBlock(out, type, encodeName(name));
}

Name
readNameBlock(tlv::Reader& reader, uint8_t type)
{
  tlv::Reader entry = reader.readBlock(type);
  Name name = decodeName(entry);
  entry.expectEnd();
  return name;
}

void
requireFullNames(const std::vector<Name>& catalog, const std::optional<Name>& next,
                 const char* what)
{
  if (catalog.empty())
    throw std::invalid_argument(std::string(what) + " catalog must not be empty");
  for (const Name& entry : catalog) {
    if (!entry.isFullName())
      throw std::invalid_argument(std::string(what) + " catalog entry '" + entry.toUri() +
                                  "' lacks a digest component");
  }
  if (next && !next->isFullName())
    throw std::invalid_argument(std::string(what) + " next pointer lacks a digest component");
}

} // namespace

Name
torrentSegmentName(const std::string& torrentName, uint64_t segmentNumber)
{
  requireSingleComponent(torrentName, "torrent name");
  Name name;
  name.append(kNamespaceRoot).append(torrentName).append(kTorrentFileMarker);
  name.appendNumber(segmentNumber);
  return name;
}

Name
manifestName(const std::string& torrentName, const std::string& filePath, uint64_t manifestNumber)
{
  requireSingleComponent(torrentName, "torrent name");
  requireSingleComponent(filePath, "file path");
  Name name;
  name.append(kNamespaceRoot).append(torrentName).append(filePath).append(kManifestMarker);
  name.appendNumber(manifestNumber);
  return name;
}

Name
dataPacketName(const std::string& torrentName, const std::string& filePath, uint64_t packetNumber)
{
  requireSingleComponent(torrentName, "torrent name");
  requireSingleComponent(filePath, "file path");
  Name name;
  name.append(kNamespaceRoot).append(torrentName).append(filePath).append(kDataMarker);
  name.appendNumber(packetNumber);
  return name;
}

TorrentFileSegment::TorrentFileSegment(uint64_t segmentNumber,
                                       std::vector<Name> manifestCatalog,
                                       std::optional<Name> nextSegmentPtr)
  : m_segmentNumber(segmentNumber)
  , m_manifestCatalog(std::move(manifestCatalog))
  , m_nextSegmentPtr(std::move(nextSegmentPtr))
{
  requireFullNames(m_manifestCatalog, m_nextSegmentPtr, "segment");
}

FileManifest::FileManifest(uint64_t manifestNumber,
                           std::string filePath,
                           std::vector<Name> subManifestCatalog,
                           std::optional<Name> nextManifestPtr)
  : m_manifestNumber(manifestNumber)
  , m_filePath(std::move(filePath))
  , m_subManifestCatalog(std::move(subManifestCatalog))
  , m_nextManifestPtr(std::move(nextManifestPtr))
{
  if (m_filePath.empty())
    throw std::invalid_argument("manifest file path must be nonempty");
  requireFullNames(m_subManifestCatalog, m_nextManifestPtr, "manifest");
}

Bytes
encodeTorrentSegment(const TorrentFileSegment& segment)
{
  Bytes body;
  tlv::appendUintBlock(body, tlv::kSegmentNumber, segment.segmentNumber(), 8);
  for (const Name& entry : segment.manifestCatalog())
    appendNameBlock(body, tlv::kCatalogEntry, entry);
  if (segment.nextSegmentPtr())
    appendNameBlock(body, tlv::kNextSegmentPtr, *segment.nextSegmentPtr());

  Bytes out;
  tlv::appendBlock(out, tlv::kTorrentFileSegment, body);
  return out;
}

TorrentFileSegment
decodeTorrentSegment(const Bytes& wire)
{
  try {
    tlv::Reader top(wire);
    tlv::Reader body = top.readBlock(tlv::kTorrentFileSegment);
    top.expectEnd();

    uint64_t segmentNumber = body.readUintBlock(tlv::kSegmentNumber, 8);

    std::vector<Name> catalog;
    while (!body.atEnd() && body.peekType() == tlv::kCatalogEntry)
      catalog.push_back(readNameBlock(body, tlv::kCatalogEntry));

    std::optional<Name> next;
    if (!body.atEnd() && body.peekType() == tlv::kNextSegmentPtr)
      next = readNameBlock(body, tlv::kNextSegmentPtr);

    body.expectEnd();
    return TorrentFileSegment(segmentNumber, std::move(catalog), std::move(next));
  }
  catch (const tlv::Error& e) {
    throw MalformedObject(e.what());
  }
  catch (const std::invalid_argument& e) {
    throw MalformedObject(e.what());
  }
}

Bytes
encodeManifest(const FileManifest& manifest)
{
  Bytes body;
  tlv::appendUintBlock(body, tlv::kManifestNumber, manifest.manifestNumber(), 8);
  tlv::appendBlock(body, tlv::kFilePath,
                   reinterpret_cast<const uint8_t*>(manifest.filePath().data()),
                   manifest.filePath().size());
  for (const Name& entry : manifest.subManifestCatalog())
    appendNameBlock(body, tlv::kSubCatalogEntry, entry);
  if (manifest.nextManifestPtr())
    appendNameBlock(body, tlv::kNextManifestPtr, *manifest.nextManifestPtr());

  Bytes out;
  tlv::appendBlock(out, tlv::kFileManifest, body);
  return out;
}

FileManifest
decodeManifest(const Bytes& wire)
{
  try {
    tlv::Reader top(wire);
    tlv::Reader body = top.readBlock(tlv::kFileManifest);
    top.expectEnd();

    uint64_t manifestNumber = body.readUintBlock(tlv::kManifestNumber, 8);
    Bytes pathBytes = body.readValue(tlv::kFilePath);
    std::string filePath(reinterpret_cast<const char*>(pathBytes.data()), pathBytes.size());

    std::vector<Name> catalog;
    while (!body.atEnd() && body.peekType() == tlv::kSubCatalogEntry)
      catalog.push_back(readNameBlock(body, tlv::kSubCatalogEntry));

    std::optional<Name> next;
    if (!body.atEnd() && body.peekType() == tlv::kNextManifestPtr)
      next = readNameBlock(body, tlv::kNextManifestPtr);

    body.expectEnd();
    return FileManifest(manifestNumber, std::move(filePath), std::move(catalog), std::move(next));
  }
  catch (const tlv::Error& e) {
    throw MalformedObject(e.what());
  }
  catch (const std::invalid_argument& e) {
    throw MalformedObject(e.what());
  }
}

std::string_view
to_string(InterestType t)
{
  switch (t) {
    case InterestType::TorrentSegmentReq:
      return "torrent-segment";
    case InterestType::FileManifestReq:
      return "file-manifest";
    case InterestType::DataPacketReq:
      return "data-packet";
    case InterestType::Unknown:
      return "unknown";
  }
  return "unknown";
}

InterestType
classifyName(const Name& name)
{
  if (name.size() < 3 || name.at(0) != kNamespaceRoot)
    return InterestType::Unknown;
  if (name.at(2) == kTorrentFileMarker)
    return InterestType::TorrentSegmentReq;
  if (name.size() >= 4 && name.at(3) == kManifestMarker)
    return InterestType::FileManifestReq;
  if (name.size() >= 4 && name.at(3) == kDataMarker)
    return InterestType::DataPacketReq;
  return InterestType::Unknown;
}

} // namespace ntorrent
