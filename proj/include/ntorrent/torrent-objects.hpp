#ifndef NTORRENT_TORRENT_OBJECTS_HPP
#define NTORRENT_TORRENT_OBJECTS_HPP

#include "ntorrent/packet.hpp"

#include <optional>

namespace ntorrent {

class MalformedObject : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Root component of every object name.
constexpr std::string_view kNamespaceRoot = "NTORRENT";
constexpr std::string_view kTorrentFileMarker = "torrent-file";
constexpr std::string_view kManifestMarker = "manifest";
constexpr std::string_view kDataMarker = "data";

// Wire-name builders for the three object kinds (sequence numbers are decimal components).
Name torrentSegmentName(const std::string& torrentName, uint64_t segmentNumber);
Name manifestName(const std::string& torrentName, const std::string& filePath, uint64_t manifestNumber);
Name dataPacketName(const std::string& torrentName, const std::string& filePath, uint64_t packetNumber);

/** \brief One segment of the torrent file: a catalog of file-manifest names
 *         plus a pointer to the next segment.
 */
class TorrentFileSegment
{
public:
  TorrentFileSegment(uint64_t segmentNumber,
                     std::vector<Name> manifestCatalog,
                     std::optional<Name> nextSegmentPtr);

  uint64_t segmentNumber() const { return m_segmentNumber; }
  const std::vector<Name>& manifestCatalog() const { return m_manifestCatalog; }
  const std::optional<Name>& nextSegmentPtr() const { return m_nextSegmentPtr; }

  bool operator==(const TorrentFileSegment&) const = default;

private:
  uint64_t m_segmentNumber;
  std::vector<Name> m_manifestCatalog;
  std::optional<Name> m_nextSegmentPtr;
};

/** \brief Per-file manifest: a catalog of data-packet names plus a pointer
 *         to the next manifest of the same file.
 */
class FileManifest
{
public:
  FileManifest(uint64_t manifestNumber,
               std::string filePath,
               std::vector<Name> subManifestCatalog,
               std::optional<Name> nextManifestPtr);

  uint64_t manifestNumber() const { return m_manifestNumber; }
  const std::string& filePath() const { return m_filePath; }
  const std::vector<Name>& subManifestCatalog() const { return m_subManifestCatalog; }
  const std::optional<Name>& nextManifestPtr() const { return m_nextManifestPtr; }

  bool operator==(const FileManifest&) const = default;

private:
  uint64_t m_manifestNumber;
  std::string m_filePath;
  std::vector<Name> m_subManifestCatalog;
  std::optional<Name> m_nextManifestPtr;
};

Bytes encodeTorrentSegment(const TorrentFileSegment& segment);
TorrentFileSegment decodeTorrentSegment(const Bytes& wire);

Bytes encodeManifest(const FileManifest& manifest);
FileManifest decodeManifest(const Bytes& wire);

enum class InterestType {
  TorrentSegmentReq,
  FileManifestReq,
  DataPacketReq,
  Unknown,
};

std::string_view to_string(InterestType t);

/// Classifies a name by its namespace markers. Total; never inspects the digest.
InterestType classifyName(const Name& name);

} // namespace ntorrent

#endif // NTORRENT_TORRENT_OBJECTS_HPP
