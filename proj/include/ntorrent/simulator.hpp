#ifndef NTORRENT_SIMULATOR_HPP
#define NTORRENT_SIMULATOR_HPP

#include "ntorrent/consumer.hpp"
#include "ntorrent/link.hpp"
#include "ntorrent/node.hpp"
#include "ntorrent/producer.hpp"
#include "ntorrent/topology.hpp"
#include "ntorrent/trace.hpp"

#include <queue>

namespace ntorrent {

enum class RunOutcome {
  Completed, // every started consumer finished
  Idle,      // event queue drained first
  TimedOut,  // sim-time horizon hit first
};

std::string_view to_string(RunOutcome outcome);

struct SimOptions
{
  double pitLifetime = kDefaultPitLifetime;
  bool printPayloads = false;
  /// Test hook: flip one payload byte of the k-th data transmission (0-based).
  std::optional<uint64_t> corruptDataIndex;
};

/** \brief Deterministic discrete-event loop over nodes, links, and apps.
 *
 *  Ordering is by (time, insertion sequence); nodes process packets in zero
 *  sim-time, only links consume time. One Simulation is single-threaded;
 *  independent Simulations may run concurrently.
 */
class Simulation
{
public:
  explicit Simulation(const TopologySpec& topo, SimOptions options = {});

  /// Installs the producer app and computes every node's route toward it.
  void attachProducer(int node, TorrentBundle bundle, const std::string& torrentName);

  /// Installs a consumer app; its bootstrap timer fires at the current sim time.
  void attachConsumer(int node, const TorrentParams& params, uint64_t nonceSeed);

  /** \brief Processes events in (time, sequence) order until the queue
   *         empties or the next event would pass maxTime (absolute).
   */
  RunOutcome run(double maxTime);

  double now() const { return m_now; }
  bool allConsumersCompleted() const;
  double completionTime(int node) const;
  double lastCompletionTime() const;

  const std::vector<TraceRecord>& trace() const { return m_trace; }

  NodeState& node(int id);
  const NodeState& node(int id) const;
  std::vector<int> nodeIds() const;

  const Producer& producer() const;
  const Consumer& consumer(int node) const;
  std::vector<int> consumerNodes() const;

  struct PhaseRecord
  {
    ConsumerPhase phase;
    double enterTime;
  };
  const std::vector<PhaseRecord>& phaseHistory(int node) const;

  /// Node-level mismatch drops plus consumer-level rejections, all nodes.
  uint64_t digestMismatchCount() const;
  uint64_t unansweredInterests() const { return m_unansweredInterests; }

private:
  struct PacketArrival
  {
    int node;
    FaceId face;
    Bytes wire;
  };

  struct AppTimer
  {
    int node;
  };

  struct Event
  {
    double time;
    uint64_t sequence;
    std::variant<PacketArrival, AppTimer> kind;
  };

  struct EventLater
  {
    bool operator()(const Event& a, const Event& b) const
    {
      if (a.time != b.time)
        return a.time > b.time;
      return a.sequence > b.sequence;
    }
  };

  struct ConsumerSlot
  {
    Consumer app;
    std::vector<PhaseRecord> phases;
    std::optional<double> completedAt;
  };

  void schedule(double time, std::variant<PacketArrival, AppTimer> kind);
  void dispatch(Event& event);
  void processArrival(PacketArrival& arrival);
  void applyNodeActions(int node, std::vector<NodeAction>&& actions);
  void applyAppActions(int node, const std::vector<AppAction>& actions);
  void transmit(int fromNode, FaceId face, Bytes wire, PacketKind kind, const Name& name);
  Link& linkAt(int node, FaceId face);

  SimOptions m_options;
  TopologySpec m_topo;
  std::map<int, NodeState> m_nodes;
  std::vector<Link> m_links;
  std::map<std::pair<int, FaceId>, size_t> m_faceToLink;
  std::optional<Producer> m_producer;
  int m_producerNode = -1;
  std::map<int, ConsumerSlot> m_consumers;

  std::priority_queue<Event, std::vector<Event>, EventLater> m_queue;
  uint64_t m_nextSequence = 0;
  double m_now = 0.0;
  std::vector<TraceRecord> m_trace; // stably time-sorted at the end of each run()
  uint64_t m_dataSends = 0;
  uint64_t m_unansweredInterests = 0;
};

} // namespace ntorrent

#endif // NTORRENT_SIMULATOR_HPP
