#include "ntorrent/consumer.hpp"

#include <iostream>

namespace ntorrent {

std::string_view
to_string(ConsumerPhase phase)
{
  switch (phase) {
    case ConsumerPhase::FetchingTorrentFile:
      return "fetching-torrent-file";
    case ConsumerPhase::FetchingManifests:
      return "fetching-manifests";
    case ConsumerPhase::FetchingData:
      return "fetching-data";
    case ConsumerPhase::Done:
      return "done";
  }
  return "unknown";
}

Consumer::Consumer(TorrentParams params, uint64_t nonceSeed, bool printPayloads)
  : m_params(std::move(params))
  , m_nonceRng(nonceSeed)
  , m_printPayloads(printPayloads)
{
  m_params.validate();
  uint64_t packetsPerFile = (m_params.fileSize + m_params.packetSize - 1) / m_params.packetSize;
  m_expectedPackets = m_params.numFiles * packetsPerFile;
}

std::vector<AppAction>
Consumer::start()
{
  if (m_started)
    throw std::logic_error("consumer already started");
  m_started = true;

  // learn the bootstrap name the way a downloaded .torrent would provide it:
  // build the same bundle locally and keep only the first segment's full name
  m_firstSegmentName = buildTorrent(m_params).firstSegmentName;
  return {ExpressInterest{m_firstSegmentName}};
}

Interest
Consumer::makeInterest(const Name& name)
{
  if (m_requested.count(name) > 0)
    throw AlreadyRequested("name already requested: " + name.toUri());
  m_requested.insert(name);
  m_pending.insert(name);
  return Interest(name, static_cast<uint32_t>(m_nonceRng()));
}

const Name&
Consumer::firstSegmentName() const
{
  if (!m_started)
    throw std::logic_error("consumer has not started");
  return m_firstSegmentName;
}

std::vector<AppAction>
Consumer::onData(const Data& data)
{
  Name arrived = fullName(data);
  if (m_pending.count(arrived) == 0) {
    // same wire name pending under a different digest: the object was altered
    // in transit; discard it and release the name so a retry could re-request it
    for (const Name& pending : m_pending) {
      if (pending.isFullName() && pending.wirePrefix() == data.wireName()) {
        ++m_digestMismatches;
        m_requested.erase(pending);
        m_pending.erase(pending);
        return {};
      }
    }
    throw UnsolicitedData("no pending interest for '" + arrived.toUri() + "'");
  }
  m_pending.erase(arrived);

  switch (data.contentType()) {
    case ContentType::TorrentSegment:
      return onSegment(data);
    case ContentType::FileManifest:
      return onManifest(data);
    case ContentType::DataPacket:
      return onPacket(data);
  }
  throw UnsolicitedData("unknown content type");
}

std::vector<AppAction>
Consumer::onSegment(const Data& data)
{
  TorrentFileSegment segment = decodeTorrentSegment(data.payload());
  m_receivedSegments.push_back(data);

  for (const Name& name : segment.manifestCatalog()) {
    if (m_manifestQueueSet.insert(name).second)
      m_manifestQueue.push_back(name);
  }

  if (segment.nextSegmentPtr())
    return {ExpressInterest{*segment.nextSegmentPtr()}};

  // last segment: every manifest name is known, fetch them all at once
  m_phase = ConsumerPhase::FetchingManifests;
  std::vector<AppAction> actions;
  for (const Name& name : m_manifestQueue)
    actions.push_back(ExpressInterest{name});
  return actions;
}

std::vector<AppAction>
Consumer::onManifest(const Data& data)
{
  FileManifest manifest = decodeManifest(data.payload());
  m_receivedManifests.push_back(data);

  if (manifest.nextManifestPtr() && m_requested.count(*manifest.nextManifestPtr()) == 0)
    throw ChainMismatch("manifest chain names '" + manifest.nextManifestPtr()->toUri() +
                        "', which the torrent file never cataloged");

  for (const Name& name : manifest.subManifestCatalog()) {
    if (m_dataQueueSet.insert(name).second)
      m_dataQueue.push_back(name);
  }

  if (anyPendingManifests())
    return {};

  // all manifests in hand: fetch every data packet at once
  m_phase = ConsumerPhase::FetchingData;
  std::vector<AppAction> actions;
  for (const Name& name : m_dataQueue)
    actions.push_back(ExpressInterest{name});
  return actions;
}

std::vector<AppAction>
Consumer::onPacket(const Data& data)
{
  m_receivedPackets.push_back(data);

  if (m_printPayloads) {
    std::cout << data.wireName().toUri() << ": ";
    std::cout.write(reinterpret_cast<const char*>(data.payload().data()),
                    static_cast<std::streamsize>(data.payload().size()));
    std::cout << '\n';
  }

  if (m_receivedPackets.size() == m_expectedPackets) {
    m_phase = ConsumerPhase::Done;
    return {Completed{}};
  }
  return {};
}

bool
Consumer::anyPendingManifests() const
{
  for (const Name& name : m_pending) {
    if (classifyName(name) == InterestType::FileManifestReq)
      return true;
  }
  return false;
}

} // namespace ntorrent
