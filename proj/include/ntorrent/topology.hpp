#ifndef NTORRENT_TOPOLOGY_HPP
#define NTORRENT_TOPOLOGY_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ntorrent {

class ConfigError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class UnreachableProducer : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/** \brief Declarative topology: nodes, links, and the producer/consumer roles.
 *
 *  Text form (one directive per line, '#' starts a comment):
 *    node <id>
 *    link <a> <b> <bits-per-second> <latency-ms>
 *    producer <id>
 *    consumer <id>
 */
struct TopologySpec
{
  struct LinkSpec
  {
    int a;
    int b;
    double dataRateBps;
    double latencyMs;
  };

  std::vector<int> nodes;
  std::vector<LinkSpec> links;
  std::optional<int> producer;
  std::vector<int> consumers;

  static TopologySpec twoNode(double dataRateBps, double latencyMs);
  static TopologySpec parse(std::istream& in);
  static TopologySpec parseFile(const std::string& path);

  /// Structural checks beyond parsing; throws ConfigError.
  void validate() const;

  bool hasNode(int id) const;
};

/** \brief Shortest-hop next hops toward the producer, ties broken by lowest
 *         next-hop node id.
 *
 *  Returns node -> next-hop node for every node that can reach the producer
 *  (the producer itself is absent). Throws UnreachableProducer when any
 *  declared consumer has no path.
 */
std::map<int, int> nextHopsTowardProducer(const TopologySpec& topo, int producerNode);

} // namespace ntorrent

#endif // NTORRENT_TOPOLOGY_HPP
