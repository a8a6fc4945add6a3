#ifndef NTORRENT_PIT_HPP
#define NTORRENT_PIT_HPP

#include "ntorrent/face.hpp"
#include "ntorrent/packet.hpp"

#include <map>
#include <set>

namespace ntorrent {

constexpr double kDefaultPitLifetime = 4.0; // sim-seconds

enum class PitVerdict {
  NewEntry,
  Aggregated,
  DuplicateNonce,
};

struct PitEntry
{
  std::set<FaceId> downstream;
  std::set<uint32_t> nonces;
  double expiry = 0.0;
};

/** \brief Pending Interest Table: one entry per outstanding full name.
 *
 *  Duplicate detection is per (name, nonce). Expiry is enforced on the
 *  interest path; the data path consumes whatever entry is present.
 */
class Pit
{
public:
  explicit Pit(double lifetime = kDefaultPitLifetime);

  PitVerdict onInterest(const Interest& interest, FaceId inFace, double now);

  /// Removes the entry for fullName and returns its downstream faces; empty set when absent.
  std::set<FaceId> onData(const Name& fullName);

  bool has(const Name& fullName) const;
  size_t size() const { return m_entries.size(); }
  const std::map<Name, PitEntry>& entries() const { return m_entries; }
  double lifetime() const { return m_lifetime; }

private:
  double m_lifetime;
  std::map<Name, PitEntry> m_entries;
};

} // namespace ntorrent

#endif // NTORRENT_PIT_HPP
