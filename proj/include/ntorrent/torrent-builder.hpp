#ifndef NTORRENT_TORRENT_BUILDER_HPP
#define NTORRENT_TORRENT_BUILDER_HPP

#include "ntorrent/torrent-objects.hpp"

namespace ntorrent {

struct TorrentParams
{
  std::string torrentName = "demo";
  uint64_t numFiles = 2;
  uint64_t fileSize = 1024;   // bytes per pretend file
  uint64_t packetSize = 256;  // payload bytes per data packet
  uint64_t namesPerManifest = 3;
  uint64_t namesPerSegment = 3;

  /// Throws std::invalid_argument unless every count and size is >= 1.
  void validate() const;
};

/** \brief All objects of one torrent, fully encoded and digest-chained.
 *
 *  Manifests are ordered file-by-file, data packets likewise; torrent
 *  segments catalog every manifest in that order.
 */
struct TorrentBundle
{
  std::vector<Data> torrentSegments;
  std::vector<Data> manifests;
  std::vector<Data> dataPackets;
  Name firstSegmentName;

  /// Full names of every object: segments, then manifests, then data packets.
  std::vector<Name> allNames() const;
};

/// Pretend file content: fileSize copies of 'A'.
Bytes generateFileBytes(uint64_t fileSize);

/// Splits a file into packetSize-byte data packets; the last packet keeps the remainder.
std::vector<Data> packetizeFile(const Bytes& file,
                                uint64_t packetSize,
                                const std::string& torrentName,
                                const std::string& filePath);

/** \brief Builds every file's manifests over its packets' full names.
 *
 *  Built last-first so each next-manifest pointer embeds the implicit digest
 *  of the already-encoded successor.
 */
std::vector<Data> buildManifests(const std::vector<std::vector<Data>>& packetsPerFile,
                                 uint64_t namesPerManifest,
                                 const std::string& torrentName);

/** \brief Builds the torrent-file segments over all manifests' full names,
 *         last-first for digest chaining.
 *
 *  Returns the segments and the full name of segment 0 (the bootstrap name).
 */
std::pair<std::vector<Data>, Name> buildTorrentSegments(const std::vector<Data>& manifests,
                                                        uint64_t namesPerSegment,
                                                        const std::string& torrentName);

/// Composes the three builders. Deterministic: equal params yield byte-identical bundles.
TorrentBundle buildTorrent(const TorrentParams& params);

} // namespace ntorrent

#endif // NTORRENT_TORRENT_BUILDER_HPP
