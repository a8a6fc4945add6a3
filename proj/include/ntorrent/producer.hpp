#ifndef NTORRENT_PRODUCER_HPP
#define NTORRENT_PRODUCER_HPP

#include "ntorrent/torrent-builder.hpp"

#include <array>
#include <map>

namespace ntorrent {

/** \brief Serves a torrent bundle from memory: exact-match lookup over the
 *         full names of every segment, manifest, and data packet.
 */
class Producer
{
public:
  Producer(TorrentBundle bundle, const std::string& torrentName);

  // the lookup table points into the bundle's vectors; moves keep that
  // storage stable, copies would not
  Producer(const Producer&) = delete;
  Producer& operator=(const Producer&) = delete;
  Producer(Producer&&) = default;
  Producer& operator=(Producer&&) = default;

  const Name& servedPrefix() const { return m_servedPrefix; }
  const TorrentBundle& bundle() const { return m_bundle; }
  size_t objectCount() const { return m_lookup.size(); }

  /// Responds with the stored Data for an exact full-name match, absent otherwise.
  std::optional<Data> onInterest(const Interest& interest);

  /// Interests seen so far, by classified type (indexed by InterestType).
  const std::array<uint64_t, 4>& interestsByType() const { return m_interestsByType; }

private:
  TorrentBundle m_bundle;
  Name m_servedPrefix;
  std::map<Name, const Data*> m_lookup;
  std::array<uint64_t, 4> m_interestsByType{};
};

} // namespace ntorrent

#endif // NTORRENT_PRODUCER_HPP
