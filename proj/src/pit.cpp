#include "ntorrent/pit.hpp"

#include <stdexcept>

namespace ntorrent {

Pit::Pit(double lifetime)
  : m_lifetime(lifetime)
{
  if (lifetime <= 0.0)
    throw std::invalid_argument("PIT lifetime must be positive");
}

PitVerdict
Pit::onInterest(const Interest& interest, FaceId inFace, double now)
{
  auto it = m_entries.find(interest.name());
  if (it != m_entries.end() && it->second.expiry <= now) {
    m_entries.erase(it);
    it = m_entries.end();
  }

  if (it == m_entries.end()) {
    PitEntry entry;
    entry.downstream.insert(inFace);
    entry.nonces.insert(interest.nonce());
    entry.expiry = now + m_lifetime;
    m_entries.emplace(interest.name(), std::move(entry));
    return PitVerdict::NewEntry;
  }

  PitEntry& entry = it->second;
  if (entry.nonces.count(interest.nonce()) > 0)
    return PitVerdict::DuplicateNonce;

  entry.downstream.insert(inFace);
  entry.nonces.insert(interest.nonce());
  entry.expiry = now + m_lifetime;
  return PitVerdict::Aggregated;
}

std::set<FaceId>
Pit::onData(const Name& fullName)
{
  auto it = m_entries.find(fullName);
  if (it == m_entries.end())
    return {};

  std::set<FaceId> downstream = std::move(it->second.downstream);
  m_entries.erase(it);
  return downstream;
}

bool
Pit::has(const Name& fullName) const
{
  return m_entries.count(fullName) > 0;
}

} // namespace ntorrent
