#ifndef NTORRENT_NODE_HPP
#define NTORRENT_NODE_HPP

#include "ntorrent/content-store.hpp"
#include "ntorrent/fib.hpp"
#include "ntorrent/pit.hpp"

#include <optional>
#include <variant>

namespace ntorrent {

enum class NodeRole {
  Producer,
  Consumer,
  Router,
};

std::string_view to_string(NodeRole role);

// Forwarding outcomes. Send* name a link face; Deliver* target the local app.
struct SendInterest
{
  Interest interest;
  FaceId face;
};

struct SendData
{
  Data data;
  FaceId face;
};

struct DeliverInterest
{
  Interest interest;
};

struct DeliverData
{
  Data data;
};

struct Drop
{
  enum class Reason { NoRoute, Unsolicited, DigestMismatch };
  Reason reason;
};

using NodeAction = std::variant<SendInterest, SendData, DeliverInterest, DeliverData, Drop>;

struct PitEntrySnapshot
{
  Name name;
  std::set<FaceId> downstream;
  size_t nonceCount;
  double expiry;
};

struct NodeSnapshot
{
  int node;
  NodeRole role;
  std::vector<Name> csNames; // insertion order
  std::vector<PitEntrySnapshot> pit;
  FaceCounters totals;
};

/** \brief One node's forwarding state: Content Store, PIT, FIB, faces, counters.
 *
 *  Pure packet-to-actions machine; link timing and app callbacks live in the
 *  simulator. Counters track link faces only (the app face is not a wire).
 */
class NodeState
{
public:
  static constexpr FaceId kAppFace = 0;

  NodeState(int id, NodeRole role, double pitLifetime = kDefaultPitLifetime);

  int id() const { return m_id; }
  NodeRole role() const { return m_role; }

  /// Declares a link face; counters start at zero.
  void addFace(FaceId face);
  bool hasFace(FaceId face) const;

  /// Registers the local app for interests under the given prefix.
  void registerAppPrefix(Name prefix);
  const std::optional<Name>& appPrefix() const { return m_appPrefix; }

  /** \brief Processes an incoming interest.
   *
   *  CS hit answers directly (no PIT or FIB activity). Otherwise the PIT
   *  decides: duplicates are dropped silently, aggregated interests emit
   *  nothing upstream, and new entries go to the local app (when registered
   *  for a matching prefix) or out the FIB's longest-prefix route.
   */
  std::vector<NodeAction> onInterest(const Interest& interest, FaceId inFace, double now);

  /** \brief Processes an incoming data packet.
   *
   *  Consumes the PIT entry, caches the data, and fans it out to every
   *  downstream face. Data matching no entry is dropped; a drop whose wire
   *  name matches a pending entry under a different digest is flagged as a
   *  digest mismatch.
   */
  std::vector<NodeAction> onData(const Data& data, FaceId inFace);

  ContentStore& cs() { return m_cs; }
  const ContentStore& cs() const { return m_cs; }
  Pit& pit() { return m_pit; }
  const Pit& pit() const { return m_pit; }
  Fib& fib() { return m_fib; }
  const Fib& fib() const { return m_fib; }

  const std::map<FaceId, FaceCounters>& faceCounters() const { return m_counters; }
  FaceCounters totals() const;

  uint64_t digestMismatchDrops() const { return m_digestMismatchDrops; }
  uint64_t unsolicitedDrops() const { return m_unsolicitedDrops; }

  NodeSnapshot snapshot() const;

private:
  void countIn(FaceId face, bool isInterest, size_t wireSize);
  void countOut(FaceId face, bool isInterest, size_t wireSize);

  int m_id;
  NodeRole m_role;
  ContentStore m_cs;
  Pit m_pit;
  Fib m_fib;
  std::optional<Name> m_appPrefix;
  std::map<FaceId, FaceCounters> m_counters;
  uint64_t m_digestMismatchDrops = 0;
  uint64_t m_unsolicitedDrops = 0;
};

} // namespace ntorrent

#endif // NTORRENT_NODE_HPP
