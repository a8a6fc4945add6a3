#include "ntorrent/simulator.hpp"

#include <algorithm>

namespace ntorrent {

std::string_view
to_string(RunOutcome outcome)
{
  switch (outcome) {
    case RunOutcome::Completed:
      return "completed";
    case RunOutcome::Idle:
      return "idle";
    case RunOutcome::TimedOut:
      return "timed-out";
  }
  return "unknown";
}

namespace {

NodeRole
roleOf(const TopologySpec& topo, int id)
{
  if (topo.producer && *topo.producer == id)
    return NodeRole::Producer;
  if (std::find(topo.consumers.begin(), topo.consumers.end(), id) != topo.consumers.end())
    return NodeRole::Consumer;
  return NodeRole::Router;
}

} // namespace

Simulation::Simulation(const TopologySpec& topo, SimOptions options)
  : m_options(options)
  , m_topo(topo)
{
  for (int id : m_topo.nodes)
    m_nodes.emplace(id, NodeState(id, roleOf(m_topo, id), m_options.pitLifetime));

  std::map<int, FaceId> nextFace;
  for (const auto& spec : m_topo.links) {
    FaceId faceA = ++nextFace[spec.a];
    FaceId faceB = ++nextFace[spec.b];
    m_nodes.at(spec.a).addFace(faceA);
    m_nodes.at(spec.b).addFace(faceB);
    m_faceToLink[{spec.a, faceA}] = m_links.size();
    m_faceToLink[{spec.b, faceB}] = m_links.size();
    m_links.emplace_back(LinkEnd{spec.a, faceA}, LinkEnd{spec.b, faceB}, spec.dataRateBps,
                         spec.latencyMs / 1000.0);
  }
}

void
Simulation::attachProducer(int node, TorrentBundle bundle, const std::string& torrentName)
{
  if (m_producer)
    throw std::logic_error("a producer is already attached");
  if (m_nodes.count(node) == 0)
    throw std::logic_error("producer node " + std::to_string(node) + " does not exist");

  m_producer.emplace(std::move(bundle), torrentName);
  m_producerNode = node;
  m_nodes.at(node).registerAppPrefix(m_producer->servedPrefix());

  // every node that can reach the producer routes the served prefix there
  for (const auto& [from, via] : nextHopsTowardProducer(m_topo, node)) {
    for (const auto& [key, linkIndex] : m_faceToLink) {
      if (key.first != from)
        continue;
      if (m_links[linkIndex].peerOf(from).node == via) {
        m_nodes.at(from).fib().insert(m_producer->servedPrefix(), {key.second});
        break;
      }
    }
  }
}

void
Simulation::attachConsumer(int node, const TorrentParams& params, uint64_t nonceSeed)
{
  if (m_nodes.count(node) == 0)
    throw std::logic_error("consumer node " + std::to_string(node) + " does not exist");
  if (m_consumers.count(node) > 0)
    throw std::logic_error("node " + std::to_string(node) + " already has a consumer");

  ConsumerSlot slot{Consumer(params, nonceSeed, m_options.printPayloads), {}, std::nullopt};
  slot.phases.push_back({slot.app.phase(), m_now});
  m_consumers.emplace(node, std::move(slot));
  schedule(m_now, AppTimer{node});
}

RunOutcome
Simulation::run(double maxTime)
{
  bool timedOut = false;
  while (!m_queue.empty()) {
    if (m_queue.top().time > maxTime) {
      timedOut = true;
      break;
    }
    Event event = m_queue.top();
    m_queue.pop();
    m_now = event.time;
    dispatch(event);
  }

  std::stable_sort(m_trace.begin(), m_trace.end(),
                   [](const TraceRecord& a, const TraceRecord& b) { return a.time < b.time; });

  if (allConsumersCompleted())
    return RunOutcome::Completed;
  return timedOut ? RunOutcome::TimedOut : RunOutcome::Idle;
}

bool
Simulation::allConsumersCompleted() const
{
  if (m_consumers.empty())
    return false;
  for (const auto& [node, slot] : m_consumers) {
    if (!slot.completedAt)
      return false;
  }
  return true;
}

double
Simulation::completionTime(int node) const
{
  const ConsumerSlot& slot = m_consumers.at(node);
  if (!slot.completedAt)
    throw std::logic_error("consumer " + std::to_string(node) + " has not completed");
  return *slot.completedAt;
}

double
Simulation::lastCompletionTime() const
{
  double last = 0.0;
  for (const auto& [node, slot] : m_consumers)
    last = std::max(last, completionTime(node));
  return last;
}

NodeState&
Simulation::node(int id)
{
  return m_nodes.at(id);
}

const NodeState&
Simulation::node(int id) const
{
  return m_nodes.at(id);
}

std::vector<int>
Simulation::nodeIds() const
{
  std::vector<int> ids;
  ids.reserve(m_nodes.size());
  for (const auto& [id, state] : m_nodes)
    ids.push_back(id);
  return ids;
}

const Producer&
Simulation::producer() const
{
  if (!m_producer)
    throw std::logic_error("no producer attached");
  return *m_producer;
}

const Consumer&
Simulation::consumer(int node) const
{
  return m_consumers.at(node).app;
}

std::vector<int>
Simulation::consumerNodes() const
{
  std::vector<int> ids;
  ids.reserve(m_consumers.size());
  for (const auto& [id, slot] : m_consumers)
    ids.push_back(id);
  return ids;
}

const std::vector<Simulation::PhaseRecord>&
Simulation::phaseHistory(int node) const
{
  return m_consumers.at(node).phases;
}

uint64_t
Simulation::digestMismatchCount() const
{
  uint64_t count = 0;
  for (const auto& [id, state] : m_nodes)
    count += state.digestMismatchDrops();
  for (const auto& [id, slot] : m_consumers)
    count += slot.app.digestMismatches();
  return count;
}

void
Simulation::schedule(double time, std::variant<PacketArrival, AppTimer> kind)
{
  m_queue.push({time, m_nextSequence++, std::move(kind)});
}

void
Simulation::dispatch(Event& event)
{
  if (auto* arrival = std::get_if<PacketArrival>(&event.kind)) {
    processArrival(*arrival);
    return;
  }

  auto& timer = std::get<AppTimer>(event.kind);
  ConsumerSlot& slot = m_consumers.at(timer.node);
  applyAppActions(timer.node, slot.app.start());
}

void
Simulation::processArrival(PacketArrival& arrival)
{
  Packet packet = decodePacket(arrival.wire);

  if (auto* interest = std::get_if<Interest>(&packet)) {
    m_trace.push_back(
      {m_now, arrival.node, TraceDir::Recv, PacketKind::Interest, interest->name(), arrival.wire.size()});
    applyNodeActions(arrival.node,
                     m_nodes.at(arrival.node).onInterest(*interest, arrival.face, m_now));
  }
  else {
    auto& data = std::get<Data>(packet);
    m_trace.push_back(
      {m_now, arrival.node, TraceDir::Recv, PacketKind::Data, fullName(data), arrival.wire.size()});
    applyNodeActions(arrival.node, m_nodes.at(arrival.node).onData(data, arrival.face));
  }
}

void
Simulation::applyNodeActions(int node, std::vector<NodeAction>&& actions)
{
  for (NodeAction& action : actions) {
    if (auto* sendInterest = std::get_if<SendInterest>(&action)) {
      transmit(node, sendInterest->face, encodePacket(sendInterest->interest),
               PacketKind::Interest, sendInterest->interest.name());
    }
    else if (auto* sendData = std::get_if<SendData>(&action)) {
      transmit(node, sendData->face, encodePacket(sendData->data), PacketKind::Data,
               fullName(sendData->data));
    }
    else if (auto* deliverInterest = std::get_if<DeliverInterest>(&action)) {
      if (!m_producer || m_producerNode != node)
        throw std::logic_error("interest delivered to a node without a producer app");
      std::optional<Data> response = m_producer->onInterest(deliverInterest->interest);
      if (response)
        applyNodeActions(node, m_nodes.at(node).onData(*response, NodeState::kAppFace));
      else
        ++m_unansweredInterests;
    }
    else if (auto* deliverData = std::get_if<DeliverData>(&action)) {
      auto it = m_consumers.find(node);
      if (it == m_consumers.end())
        throw std::logic_error("data delivered to a node without a consumer app");
      ConsumerSlot& slot = it->second;
      std::vector<AppAction> appActions = slot.app.onData(deliverData->data);
      if (slot.phases.back().phase != slot.app.phase())
        slot.phases.push_back({slot.app.phase(), m_now});
      applyAppActions(node, appActions);
    }
    else {
      if (std::get<Drop>(action).reason == Drop::Reason::NoRoute)
        ++m_unansweredInterests;
    }
  }
}

void
Simulation::applyAppActions(int node, const std::vector<AppAction>& actions)
{
  for (const AppAction& action : actions) {
    if (auto* express = std::get_if<ExpressInterest>(&action)) {
      Interest interest = m_consumers.at(node).app.makeInterest(express->name);
      applyNodeActions(node, m_nodes.at(node).onInterest(interest, NodeState::kAppFace, m_now));
    }
    else {
      m_consumers.at(node).completedAt = m_now;
    }
  }
}

void
Simulation::transmit(int fromNode, FaceId face, Bytes wire, PacketKind kind, const Name& name)
{
  Link& link = linkAt(fromNode, face);

  if (kind == PacketKind::Data) {
    if (m_options.corruptDataIndex && m_dataSends == *m_options.corruptDataIndex)
      wire.back() ^= 0x01; // the final byte of an encoded data packet is payload
    ++m_dataSends;
  }

  Link::Timing timing = link.schedule(wire.size(), fromNode, m_now);
  m_trace.push_back({timing.start, fromNode, TraceDir::Send, kind, name, wire.size()});

  const LinkEnd& peer = link.peerOf(fromNode);
  schedule(timing.arrival, PacketArrival{peer.node, peer.face, std::move(wire)});
}

Link&
Simulation::linkAt(int node, FaceId face)
{
  auto it = m_faceToLink.find({node, face});
  if (it == m_faceToLink.end())
    throw std::logic_error("node " + std::to_string(node) + " has no link on face " +
                           std::to_string(face));
  return m_links[it->second];
}

} // namespace ntorrent
