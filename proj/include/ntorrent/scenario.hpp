#ifndef NTORRENT_SCENARIO_HPP
#define NTORRENT_SCENARIO_HPP

#include "ntorrent/simulator.hpp"

#include <iosfwd>

namespace ntorrent {

class IoError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Raised by parseConfig for --help; what() is the full help text.
class HelpRequested : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct ScenarioConfig
{
  TorrentParams torrent;
  double dataRateBps = 1e6;
  double latencyMs = 10.0;
  std::string topology = "two-node"; // "two-node" or a topology file path
  uint64_t seed = 1;
  double maxSimTime = 60.0; // sim-seconds
  std::string traceOut;     // empty: trace kept in memory only
  std::string reportOut;    // empty: report goes to stdout
  bool printPayloads = false;
  /// Test hook: corrupt one byte of the k-th data transmission.
  std::optional<uint64_t> corruptPacket;
};

/// Parses CLI flags (without argv[0]); throws ConfigError or HelpRequested.
ScenarioConfig parseConfig(const std::vector<std::string>& args);

struct RunReport
{
  struct NodeReport
  {
    int id;
    NodeRole role;
    FaceCounters counters;
    size_t csSize;
    size_t pitSize;
  };

  struct PhaseEntry
  {
    ConsumerPhase phase;
    double enterTime;
  };

  RunOutcome outcome = RunOutcome::Idle;
  std::optional<double> completionTime; // absent unless Completed
  uint64_t seed;
  ScenarioConfig config;
  std::vector<NodeReport> nodes; // ascending node id

  // reporting consumer = lowest consumer node id
  std::vector<PhaseEntry> phases;
  uint64_t segments = 0;
  uint64_t manifests = 0;
  uint64_t packets = 0;

  // kept in memory, not part of the serialized report
  uint64_t digestMismatches = 0;
  std::vector<TraceRecord> trace;
};

/** \brief Builds topology, producer bundle, and consumers from the config,
 *         runs the engine, and collects the report.
 *
 *  Throws ConfigError / UnreachableProducer on a missing or unusable topology.
 */
RunReport runScenario(const ScenarioConfig& config);

/// Serializes the report as JSON with stable key order.
std::string emitReport(const RunReport& report);

/// Writes content to path; throws IoError.
void writeFile(const std::string& path, const std::string& content);

/** \brief The whole CLI pipeline: parse, run, emit, write files.
 *
 *  Returns the process exit code: 0 completed, 2 configuration or topology
 *  error, 3 run ended without completion, 4 I/O error.
 */
int scenarioMain(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ntorrent

#endif // NTORRENT_SCENARIO_HPP
