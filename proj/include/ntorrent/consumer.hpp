#ifndef NTORRENT_CONSUMER_HPP
#define NTORRENT_CONSUMER_HPP

#include "ntorrent/torrent-builder.hpp"

#include <random>
#include <set>

namespace ntorrent {

enum class ConsumerPhase {
  FetchingTorrentFile,
  FetchingManifests,
  FetchingData,
  Done,
};

std::string_view to_string(ConsumerPhase phase);

struct ExpressInterest
{
  Name name;
};

struct Completed
{
};

using AppAction = std::variant<ExpressInterest, Completed>;

class AlreadyRequested : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

class UnsolicitedData : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A next-manifest pointer that names a manifest absent from the torrent catalogs.
class ChainMismatch : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/** \brief Consumer state machine: fetches the torrent file segment chain,
 *         then every file manifest, then every data packet.
 *
 *  Phase transitions are monotone; each full name is requested at most once.
 *  Received objects are verified against the digest component of the
 *  requested name, and a mismatch rejects the object without retry.
 */
class Consumer
{
public:
  Consumer(TorrentParams params, uint64_t nonceSeed, bool printPayloads = false);

  /** \brief Bootstrap: builds the torrent locally to learn the name of
   *         segment 0 and asks for it.
   *
   *  Only the bootstrap name is kept; the locally built objects are discarded.
   */
  std::vector<AppAction> start();

  /// Materializes an interest with the next seeded nonce; name joins pending/requested.
  Interest makeInterest(const Name& name);

  std::vector<AppAction> onData(const Data& data);

  ConsumerPhase phase() const { return m_phase; }
  const TorrentParams& params() const { return m_params; }
  const Name& firstSegmentName() const;
  bool started() const { return m_started; }

  /// Data packets the torrent holds in total; completion means receiving them all.
  uint64_t expectedPackets() const { return m_expectedPackets; }

  const std::set<Name>& pending() const { return m_pending; }
  const std::set<Name>& requested() const { return m_requested; }
  const std::vector<Data>& receivedSegments() const { return m_receivedSegments; }
  const std::vector<Data>& receivedManifests() const { return m_receivedManifests; }
  const std::vector<Data>& receivedPackets() const { return m_receivedPackets; }
  const std::vector<Name>& manifestQueue() const { return m_manifestQueue; }
  const std::vector<Name>& dataQueue() const { return m_dataQueue; }

  uint64_t digestMismatches() const { return m_digestMismatches; }

private:
  std::vector<AppAction> onSegment(const Data& data);
  std::vector<AppAction> onManifest(const Data& data);
  std::vector<AppAction> onPacket(const Data& data);
  bool anyPendingManifests() const;

  TorrentParams m_params;
  uint64_t m_expectedPackets;
  std::mt19937_64 m_nonceRng;
  bool m_printPayloads;
  bool m_started = false;
  Name m_firstSegmentName;
  ConsumerPhase m_phase = ConsumerPhase::FetchingTorrentFile;

  std::set<Name> m_pending;
  std::set<Name> m_requested;
  std::vector<Data> m_receivedSegments;
  std::vector<Data> m_receivedManifests;
  std::vector<Data> m_receivedPackets;
  std::vector<Name> m_manifestQueue;
  std::set<Name> m_manifestQueueSet;
  std::vector<Name> m_dataQueue;
  std::set<Name> m_dataQueueSet;
  uint64_t m_digestMismatches = 0;
};

} // namespace ntorrent

#endif // NTORRENT_CONSUMER_HPP
