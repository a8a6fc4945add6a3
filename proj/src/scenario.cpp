#include "ntorrent/scenario.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

namespace ntorrent {

ScenarioConfig
parseConfig(const std::vector<std::string>& args)
{
  ScenarioConfig config;

  CLI::App app{"Simulates one torrent download over named-data forwarding: a producer node\n"
               "serves the torrent file, file manifests, and data packets; consumer nodes\n"
               "fetch them phase by phase and verify every object by its name digest."};
  app.name("ntorrent-simple");

  app.add_option("--torrent-name", config.torrent.torrentName, "Torrent name (one name component)")
    ->capture_default_str();
  app.add_option("--num-files", config.torrent.numFiles, "Number of files in the torrent")
    ->capture_default_str();
  app.add_option("--file-size", config.torrent.fileSize, "Size of each file in bytes")
    ->capture_default_str();
  app.add_option("--packet-size", config.torrent.packetSize, "Payload bytes per data packet")
    ->capture_default_str();
  app.add_option("--names-per-segment", config.torrent.namesPerSegment,
                 "Manifest names per torrent-file segment")
    ->capture_default_str();
  app.add_option("--names-per-manifest", config.torrent.namesPerManifest,
                 "Data packet names per file manifest")
    ->capture_default_str();
  app.add_option("--data-rate-bps", config.dataRateBps, "Link data rate in bits per second")
    ->capture_default_str();
  app.add_option("--latency-ms", config.latencyMs, "Link one-way latency in milliseconds")
    ->capture_default_str();
  app.add_option("--topology", config.topology, "'two-node' or a topology file path")
    ->capture_default_str();
  app.add_option("--seed", config.seed, "Nonce generator seed")->capture_default_str();
  app.add_option("--max-sim-time", config.maxSimTime, "Simulated-time horizon in seconds")
    ->capture_default_str();
  app.add_option("--trace-out", config.traceOut, "Write the packet trace CSV to this path");
  app.add_option("--report-out", config.reportOut, "Write the JSON report to this path");
  app.add_flag("--print-payloads", config.printPayloads, "Print each received data payload");

  uint64_t corrupt = 0;
  auto* corruptOption =
    app.add_option("--corrupt-packet", corrupt,
                   "Test hook: flip one payload byte of the k-th data transmission (0-based)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  }
  catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  }
  catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  if (corruptOption->count() > 0)
    config.corruptPacket = corrupt;

  try {
    config.torrent.validate();
  }
  catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (config.dataRateBps <= 0.0)
    throw ConfigError("data-rate-bps must be positive");
  if (config.latencyMs < 0.0)
    throw ConfigError("latency-ms must not be negative");
  if (config.maxSimTime <= 0.0)
    throw ConfigError("max-sim-time must be positive");
  if (config.topology.empty())
    throw ConfigError("topology must be 'two-node' or a file path");

  return config;
}

RunReport
runScenario(const ScenarioConfig& config)
{
  TopologySpec topo = (config.topology == "two-node")
                        ? TopologySpec::twoNode(config.dataRateBps, config.latencyMs)
                        : TopologySpec::parseFile(config.topology);
  topo.validate();

  SimOptions options;
  options.printPayloads = config.printPayloads;
  options.corruptDataIndex = config.corruptPacket;

  Simulation sim(topo, options);
  sim.attachProducer(*topo.producer, buildTorrent(config.torrent), config.torrent.torrentName);

  std::vector<int> consumers = topo.consumers;
  std::sort(consumers.begin(), consumers.end());
  uint64_t seedOffset = 0;
  for (int node : consumers)
    sim.attachConsumer(node, config.torrent, config.seed + seedOffset++);

  RunReport report;
  report.outcome = sim.run(config.maxSimTime);
  report.seed = config.seed;
  report.config = config;
  if (report.outcome == RunOutcome::Completed)
    report.completionTime = sim.lastCompletionTime();

  for (int id : sim.nodeIds()) {
    const NodeState& state = sim.node(id);
    report.nodes.push_back({id, state.role(), state.totals(), state.cs().size(), state.pit().size()});
  }

  int reporting = consumers.front();
  for (const auto& record : sim.phaseHistory(reporting))
    report.phases.push_back({record.phase, record.enterTime});

  const Consumer& app = sim.consumer(reporting);
  report.segments = app.receivedSegments().size();
  report.manifests = app.receivedManifests().size();
  report.packets = app.receivedPackets().size();

  report.digestMismatches = sim.digestMismatchCount();
  report.trace = sim.trace();
  return report;
}

std::string
emitReport(const RunReport& report)
{
  using Json = nlohmann::ordered_json;

  Json doc;
  doc["outcome"] = std::string(to_string(report.outcome));
  if (report.completionTime)
    doc["completion_time_s"] = *report.completionTime;
  else
    doc["completion_time_s"] = nullptr;
  doc["seed"] = report.seed;

  const ScenarioConfig& config = report.config;
  doc["params"] = {
    {"torrent_name", config.torrent.torrentName},
    {"num_files", config.torrent.numFiles},
    {"file_size", config.torrent.fileSize},
    {"packet_size", config.torrent.packetSize},
    {"names_per_segment", config.torrent.namesPerSegment},
    {"names_per_manifest", config.torrent.namesPerManifest},
    {"data_rate_bps", config.dataRateBps},
    {"latency_ms", config.latencyMs},
    {"topology", config.topology},
    {"max_sim_time_s", config.maxSimTime},
  };

  doc["nodes"] = Json::array();
  for (const auto& node : report.nodes) {
    doc["nodes"].push_back({
      {"id", node.id},
      {"role", std::string(to_string(node.role))},
      {"counters",
       {
         {"interests_in", node.counters.interestsIn},
         {"interests_out", node.counters.interestsOut},
         {"data_in", node.counters.dataIn},
         {"data_out", node.counters.dataOut},
         {"bytes_in", node.counters.bytesIn},
         {"bytes_out", node.counters.bytesOut},
       }},
      {"cs_size", node.csSize},
      {"pit_size", node.pitSize},
    });
  }

  Json phases = Json::array();
  for (const auto& entry : report.phases)
    phases.push_back({
      {"phase", std::string(to_string(entry.phase))},
      {"enter_time_s", entry.enterTime},
    });
  doc["consumer"] = {
    {"phases", std::move(phases)},
    {"segments", report.segments},
    {"manifests", report.manifests},
    {"packets", report.packets},
  };

  return doc.dump(2) + "\n";
}

void
writeFile(const std::string& path, const std::string& content)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw IoError("cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out)
    throw IoError("failed writing '" + path + "'");
}

int
scenarioMain(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  try {
    ScenarioConfig config = parseConfig(args);
    RunReport report = runScenario(config);

    std::string json = emitReport(report);
    if (config.reportOut.empty())
      out << json;
    else
      writeFile(config.reportOut, json);

    if (!config.traceOut.empty())
      writeFile(config.traceOut, traceToCsv(report.trace));

    if (report.outcome == RunOutcome::Completed)
      return 0;
    err << "run ended without completion: " << to_string(report.outcome) << '\n';
    return 3;
  }
  catch (const HelpRequested& help) {
    out << help.what();
    return 0;
  }
  catch (const UnreachableProducer& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  }
}

} // namespace ntorrent
