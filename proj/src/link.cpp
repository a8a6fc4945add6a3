#include "ntorrent/link.hpp"

#include <algorithm>
#include <stdexcept>

namespace ntorrent {

Link::Link(LinkEnd a, LinkEnd b, double dataRateBps, double latencySeconds)
  : m_a(a)
  , m_b(b)
  , m_dataRateBps(dataRateBps)
  , m_latency(latencySeconds)
{
  if (a.node == b.node)
    throw std::invalid_argument("link endpoints must be distinct nodes");
  if (dataRateBps <= 0.0)
    throw std::invalid_argument("link data rate must be positive");
  if (latencySeconds < 0.0)
    throw std::invalid_argument("link latency must not be negative");
}

Link::Timing
Link::schedule(size_t bytes, int fromNode, double now)
{
  size_t dir = directionIndex(fromNode);
  double start = std::max(now, m_busyUntil[dir]);
  double serialization = static_cast<double>(bytes) * 8.0 / m_dataRateBps;
  m_busyUntil[dir] = start + serialization;
  return {start, start + serialization + m_latency};
}

double
Link::transmissionTime(size_t bytes) const
{
  return static_cast<double>(bytes) * 8.0 / m_dataRateBps + m_latency;
}

const LinkEnd&
Link::peerOf(int fromNode) const
{
  if (fromNode == m_a.node)
    return m_b;
  if (fromNode == m_b.node)
    return m_a;
  throw std::invalid_argument("node " + std::to_string(fromNode) + " is not on this link");
}

double
Link::busyUntil(int fromNode) const
{
  return m_busyUntil[directionIndex(fromNode)];
}

size_t
Link::directionIndex(int fromNode) const
{
  if (fromNode == m_a.node)
    return 0;
  if (fromNode == m_b.node)
    return 1;
  throw std::invalid_argument("node " + std::to_string(fromNode) + " is not on this link");
}

} // namespace ntorrent
