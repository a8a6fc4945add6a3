#ifndef NTORRENT_LINK_HPP
#define NTORRENT_LINK_HPP

#include "ntorrent/face.hpp"

#include <array>
#include <cstddef>

namespace ntorrent {

struct LinkEnd
{
  int node;
  FaceId face;
};

/** \brief Point-to-point link: serialization at dataRate plus fixed latency,
 *         FIFO per direction.
 */
class Link
{
public:
  Link(LinkEnd a, LinkEnd b, double dataRateBps, double latencySeconds);

  struct Timing
  {
    double start;   // when serialization begins (after any queue)
    double arrival; // when the last bit reaches the far end
  };

  /// Queues one packet of `bytes` bytes from `fromNode`; advances that direction's busy time.
  Timing schedule(size_t bytes, int fromNode, double now);

  /// Serialization + propagation for one packet on an idle direction.
  double transmissionTime(size_t bytes) const;

  const LinkEnd& endA() const { return m_a; }
  const LinkEnd& endB() const { return m_b; }
  const LinkEnd& peerOf(int fromNode) const;

  double dataRateBps() const { return m_dataRateBps; }
  double latency() const { return m_latency; }
  double busyUntil(int fromNode) const;

private:
  size_t directionIndex(int fromNode) const;

  LinkEnd m_a;
  LinkEnd m_b;
  double m_dataRateBps;
  double m_latency;
  std::array<double, 2> m_busyUntil{0.0, 0.0};
};

} // namespace ntorrent

#endif // NTORRENT_LINK_HPP
