#include "ntorrent/node.hpp"

#include <stdexcept>

namespace ntorrent {

std::string_view
to_string(NodeRole role)
{
  switch (role) {
    case NodeRole::Producer:
      return "producer";
    case NodeRole::Consumer:
      return "consumer";
    case NodeRole::Router:
      return "router";
  }
  return "unknown";
}

NodeState::NodeState(int id, NodeRole role, double pitLifetime)
  : m_id(id)
  , m_role(role)
  , m_pit(pitLifetime)
{
}

void
NodeState::addFace(FaceId face)
{
  if (face == kAppFace)
    throw std::invalid_argument("face 0 is reserved for the local application");
  m_counters.try_emplace(face);
}

bool
NodeState::hasFace(FaceId face) const
{
  return m_counters.count(face) > 0;
}

void
NodeState::registerAppPrefix(Name prefix)
{
  m_appPrefix = std::move(prefix);
}

std::vector<NodeAction>
NodeState::onInterest(const Interest& interest, FaceId inFace, double now)
{
  if (inFace != kAppFace && !hasFace(inFace))
    throw std::logic_error("interest arrived on undeclared face " + std::to_string(inFace));

  countIn(inFace, true, encodePacket(interest).size());

  if (const Data* cached = m_cs.lookup(interest.name()); cached != nullptr) {
    if (inFace == kAppFace)
      return {DeliverData{*cached}};
    countOut(inFace, false, encodePacket(*cached).size());
    return {SendData{*cached, inFace}};
  }

  switch (m_pit.onInterest(interest, inFace, now)) {
    case PitVerdict::DuplicateNonce:
    case PitVerdict::Aggregated:
      // the entry (or its twin nonce) is already on its way upstream
      return {};
    case PitVerdict::NewEntry:
      break;
  }

  if (m_appPrefix && m_appPrefix->isPrefixOf(interest.name()))
    return {DeliverInterest{interest}};

  if (auto nextHop = m_fib.longestPrefixMatch(interest.name()); nextHop.has_value()) {
    countOut(*nextHop, true, encodePacket(interest).size());
    return {SendInterest{interest, *nextHop}};
  }

  return {Drop{Drop::Reason::NoRoute}};
}

std::vector<NodeAction>
NodeState::onData(const Data& data, FaceId inFace)
{
  if (inFace != kAppFace && !hasFace(inFace))
    throw std::logic_error("data arrived on undeclared face " + std::to_string(inFace));

  countIn(inFace, false, encodePacket(data).size());

  std::set<FaceId> downstream = m_pit.onData(fullName(data));
  if (downstream.empty()) {
    // a pending name with the same wire prefix means the payload was altered
    // in transit: the digest no longer matches what was asked for
    for (const auto& [pendingName, entry] : m_pit.entries()) {
      if (pendingName.isFullName() && pendingName.wirePrefix() == data.wireName()) {
        ++m_digestMismatchDrops;
        return {Drop{Drop::Reason::DigestMismatch}};
      }
    }
    ++m_unsolicitedDrops;
    return {Drop{Drop::Reason::Unsolicited}};
  }

  m_cs.insert(data);

  std::vector<NodeAction> actions;
  for (FaceId face : downstream) {
    if (face == kAppFace) {
      actions.push_back(DeliverData{data});
    }
    else {
      countOut(face, false, encodePacket(data).size());
      actions.push_back(SendData{data, face});
    }
  }
  return actions;
}

FaceCounters
NodeState::totals() const
{
  FaceCounters sum;
  for (const auto& [face, counters] : m_counters)
    sum += counters;
  return sum;
}

NodeSnapshot
NodeState::snapshot() const
{
  NodeSnapshot snap;
  snap.node = m_id;
  snap.role = m_role;
  snap.csNames = m_cs.names();
  for (const auto& [name, entry] : m_pit.entries())
    snap.pit.push_back({name, entry.downstream, entry.nonces.size(), entry.expiry});
  snap.totals = totals();
  return snap;
}

void
NodeState::countIn(FaceId face, bool isInterest, size_t wireSize)
{
  if (face == kAppFace)
    return;
  FaceCounters& c = m_counters.at(face);
  (isInterest ? c.interestsIn : c.dataIn) += 1;
  c.bytesIn += wireSize;
}

void
NodeState::countOut(FaceId face, bool isInterest, size_t wireSize)
{
  if (face == kAppFace)
    return;
  FaceCounters& c = m_counters.at(face);
  (isInterest ? c.interestsOut : c.dataOut) += 1;
  c.bytesOut += wireSize;
}

} // namespace ntorrent
