#include "ntorrent/topology.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace ntorrent {

TopologySpec
TopologySpec::twoNode(double dataRateBps, double latencyMs)
{
  TopologySpec topo;
  topo.nodes = {0, 1};
  topo.links.push_back({0, 1, dataRateBps, latencyMs});
  topo.producer = 0;
  topo.consumers = {1};
  return topo;
}

TopologySpec
TopologySpec::parse(std::istream& in)
{
  TopologySpec topo;
  std::string line;
  int lineNo = 0;

  while (std::getline(in, line)) {
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);

    std::istringstream fields(line);
    std::string directive;
    if (!(fields >> directive))
      continue;

    auto fail = [&](const std::string& what) {
      throw ConfigError("topology line " + std::to_string(lineNo) + ": " + what);
    };
    auto readTail = [&]() {
      std::string extra;
      if (fields >> extra)
        fail("unexpected trailing field '" + extra + "'");
    };

    if (directive == "node") {
      int id;
      if (!(fields >> id))
        fail("usage: node <id>");
      readTail();
      topo.nodes.push_back(id);
    }
    else if (directive == "link") {
      LinkSpec link;
      if (!(fields >> link.a >> link.b >> link.dataRateBps >> link.latencyMs))
        fail("usage: link <a> <b> <bits-per-second> <latency-ms>");
      readTail();
      topo.links.push_back(link);
    }
    else if (directive == "producer") {
      int id;
      if (!(fields >> id))
        fail("usage: producer <id>");
      readTail();
      if (topo.producer)
        fail("a second producer is not supported");
      topo.producer = id;
    }
    else if (directive == "consumer") {
      int id;
      if (!(fields >> id))
        fail("usage: consumer <id>");
      readTail();
      topo.consumers.push_back(id);
    }
    else {
      fail("unknown directive '" + directive + "'");
    }
  }

  return topo;
}

TopologySpec
TopologySpec::parseFile(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open topology file '" + path + "'");
  return parse(in);
}

void
TopologySpec::validate() const
{
  if (nodes.empty())
    throw ConfigError("topology declares no nodes");

  std::set<int> ids;
  for (int id : nodes) {
    if (id < 0)
      throw ConfigError("node ids must not be negative");
    if (!ids.insert(id).second)
      throw ConfigError("node " + std::to_string(id) + " declared twice");
  }

  for (const LinkSpec& link : links) {
    if (!hasNode(link.a) || !hasNode(link.b))
      throw ConfigError("link references undeclared node");
    if (link.a == link.b)
      throw ConfigError("link endpoints must be distinct");
    if (link.dataRateBps <= 0.0)
      throw ConfigError("link data rate must be positive");
    if (link.latencyMs < 0.0)
      throw ConfigError("link latency must not be negative");
  }

  if (!producer)
    throw ConfigError("topology declares no producer");
  if (!hasNode(*producer))
    throw ConfigError("producer node " + std::to_string(*producer) + " is not declared");

  if (consumers.empty())
    throw ConfigError("topology declares no consumer");
  std::set<int> seenConsumers;
  for (int id : consumers) {
    if (!hasNode(id))
      throw ConfigError("consumer node " + std::to_string(id) + " is not declared");
    if (id == *producer)
      throw ConfigError("node " + std::to_string(id) + " cannot be both producer and consumer");
    if (!seenConsumers.insert(id).second)
      throw ConfigError("consumer " + std::to_string(id) + " declared twice");
  }
}

bool
TopologySpec::hasNode(int id) const
{
  return std::find(nodes.begin(), nodes.end(), id) != nodes.end();
}

std::map<int, int>
nextHopsTowardProducer(const TopologySpec& topo, int producerNode)
{
  if (!topo.hasNode(producerNode))
    throw ConfigError("producer node " + std::to_string(producerNode) + " is not declared");

  std::map<int, std::set<int>> neighbors;
  for (const auto& link : topo.links) {
    neighbors[link.a].insert(link.b);
    neighbors[link.b].insert(link.a);
  }

  constexpr int kUnreached = std::numeric_limits<int>::max();
  std::map<int, int> dist;
  for (int id : topo.nodes)
    dist[id] = kUnreached;
  dist[producerNode] = 0;

  std::deque<int> frontier{producerNode};
  while (!frontier.empty()) {
    int current = frontier.front();
    frontier.pop_front();
    for (int next : neighbors[current]) {
      if (dist[next] == kUnreached) {
        dist[next] = dist[current] + 1;
        frontier.push_back(next);
      }
    }
  }

  for (int consumer : topo.consumers) {
    if (dist.at(consumer) == kUnreached)
      throw UnreachableProducer("consumer " + std::to_string(consumer) +
                                " has no path to the producer");
  }

  std::map<int, int> nextHops;
  for (int id : topo.nodes) {
    if (id == producerNode || dist[id] == kUnreached)
      continue;
    // neighbors are iterated in ascending id order, so the first one on a
    // shortest path wins ties deterministically
    for (int neighbor : neighbors[id]) {
      if (dist[neighbor] == dist[id] - 1) {
        nextHops[id] = neighbor;
        break;
      }
    }
  }
  return nextHops;
}

} // namespace ntorrent
