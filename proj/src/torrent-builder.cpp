#include "ntorrent/torrent-builder.hpp"

#include <algorithm>

namespace ntorrent {

namespace {

std::string
syntheticFilePath(uint64_t index)
{
  return "file" + std::to_string(index);
}

} // namespace

void
TorrentParams::validate() const
{
  if (torrentName.empty() || torrentName.find('/') != std::string::npos)
    throw std::invalid_argument("torrent name must be a single nonempty component");
  if (numFiles == 0)
    throw std::invalid_argument("num-files must be at least 1");
  if (fileSize == 0)
    throw std::invalid_argument("file-size must be at least 1");
  if (packetSize == 0)
    throw std::invalid_argument("packet-size must be at least 1");
  if (namesPerManifest == 0)
    throw std::invalid_argument("names-per-manifest must be at least 1");
  if (namesPerSegment == 0)
    throw std::invalid_argument("names-per-segment must be at least 1");
}

std::vector<Name>
TorrentBundle::allNames() const
{
  std::vector<Name> names;
  names.reserve(torrentSegments.size() + manifests.size() + dataPackets.size());
  for (const auto& d : torrentSegments)
    names.push_back(fullName(d));
  for (const auto& d : manifests)
    names.push_back(fullName(d));
  for (const auto& d : dataPackets)
    names.push_back(fullName(d));
  return names;
}

Bytes
generateFileBytes(uint64_t fileSize)
{
  return Bytes(fileSize, uint8_t('A'));
}

std::vector<Data>
packetizeFile(const Bytes& file,
              uint64_t packetSize,
              const std::string& torrentName,
              const std::string& filePath)
{
  if (packetSize == 0)
    throw std::invalid_argument("packet-size must be at least 1");

  std::vector<Data> packets;
  for (uint64_t offset = 0, number = 0; offset < file.size(); offset += packetSize, ++number) {
    uint64_t end = std::min<uint64_t>(offset + packetSize, file.size());
    Bytes payload(file.begin() + offset, file.begin() + end);
    packets.emplace_back(dataPacketName(torrentName, filePath, number), ContentType::DataPacket,
                         std::move(payload));
  }
  return packets;
}

std::vector<Data>
buildManifests(const std::vector<std::vector<Data>>& packetsPerFile,
               uint64_t namesPerManifest,
               const std::string& torrentName)
{
  if (namesPerManifest == 0)
    throw std::invalid_argument("names-per-manifest must be at least 1");

  std::vector<Data> out;
  for (const auto& packets : packetsPerFile) {
    if (packets.empty())
      throw std::invalid_argument("every file needs at least one data packet");

    // the file path is the third component of every packet name
    const std::string& filePath = packets.front().wireName().at(2);

    std::vector<Name> packetNames;
    packetNames.reserve(packets.size());
    for (const auto& p : packets)
      packetNames.push_back(fullName(p));

    uint64_t count = (packetNames.size() + namesPerManifest - 1) / namesPerManifest;

    // last-first so every next pointer names an already-encoded successor
    std::vector<Data> fileManifests;
    fileManifests.reserve(count);
    std::optional<Name> next;
    for (uint64_t number = count; number-- > 0;) {
      auto first = packetNames.begin() + number * namesPerManifest;
      auto last = packetNames.begin() +
                  std::min<uint64_t>((number + 1) * namesPerManifest, packetNames.size());
      FileManifest manifest(number, filePath, std::vector<Name>(first, last), next);
      Data packet(manifestName(torrentName, filePath, number), ContentType::FileManifest,
                  encodeManifest(manifest));
      next = fullName(packet);
      fileManifests.push_back(std::move(packet));
    }
    std::reverse(fileManifests.begin(), fileManifests.end());

    out.insert(out.end(), std::make_move_iterator(fileManifests.begin()),
               std::make_move_iterator(fileManifests.end()));
  }
  return out;
}

std::pair<std::vector<Data>, Name>
buildTorrentSegments(const std::vector<Data>& manifests,
                     uint64_t namesPerSegment,
                     const std::string& torrentName)
{
  if (namesPerSegment == 0)
    throw std::invalid_argument("names-per-segment must be at least 1");
  if (manifests.empty())
    throw std::invalid_argument("a torrent needs at least one manifest");

  std::vector<Name> manifestNames;
  manifestNames.reserve(manifests.size());
  for (const auto& m : manifests)
    manifestNames.push_back(fullName(m));

  uint64_t count = (manifestNames.size() + namesPerSegment - 1) / namesPerSegment;

  std::vector<Data> segments;
  segments.reserve(count);
  std::optional<Name> next;
  for (uint64_t number = count; number-- > 0;) {
    auto first = manifestNames.begin() + number * namesPerSegment;
    auto last = manifestNames.begin() +
                std::min<uint64_t>((number + 1) * namesPerSegment, manifestNames.size());
    TorrentFileSegment segment(number, std::vector<Name>(first, last), next);
    Data packet(torrentSegmentName(torrentName, number), ContentType::TorrentSegment,
                encodeTorrentSegment(segment));
    next = fullName(packet);
    segments.push_back(std::move(packet));
  }
  std::reverse(segments.begin(), segments.end());

  Name firstSegmentName = fullName(segments.front());
  return {std::move(segments), std::move(firstSegmentName)};
}

TorrentBundle
buildTorrent(const TorrentParams& params)
{
  params.validate();

  std::vector<std::vector<Data>> packetsPerFile;
  packetsPerFile.reserve(params.numFiles);
  for (uint64_t i = 0; i < params.numFiles; ++i) {
    Bytes file = generateFileBytes(params.fileSize);
    packetsPerFile.push_back(
      packetizeFile(file, params.packetSize, params.torrentName, syntheticFilePath(i)));
  }

  TorrentBundle bundle;
  bundle.manifests = buildManifests(packetsPerFile, params.namesPerManifest, params.torrentName);
  std::tie(bundle.torrentSegments, bundle.firstSegmentName) =
    buildTorrentSegments(bundle.manifests, params.namesPerSegment, params.torrentName);

  for (auto& packets : packetsPerFile)
    bundle.dataPackets.insert(bundle.dataPackets.end(), std::make_move_iterator(packets.begin()),
                              std::make_move_iterator(packets.end()));
  return bundle;
}

} // namespace ntorrent
