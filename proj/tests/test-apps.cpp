#include "ntorrent/consumer.hpp"
#include "ntorrent/producer.hpp"

#include "doctest.h"

#include <deque>

using namespace ntorrent;

namespace {

TorrentParams
defaultParams()
{
  return {}; // demo, 2 files, 1024 B, 256 B packets, 3 names per manifest/segment
}

Producer
makeProducer()
{
  return Producer(buildTorrent(defaultParams()), "demo");
}

// Runs a started consumer against a producer with a perfect lossless wire,
// returning the number of interests exchanged. Interests are materialized
// the moment the consumer emits the action, as a forwarder would.
size_t
pump(Consumer& consumer, Producer& producer, std::vector<AppAction> actions)
{
  std::deque<Interest> queue;
  size_t exchanged = 0;
  bool completed = false;

  auto enqueue = [&](const std::vector<AppAction>& newActions) {
    for (const AppAction& action : newActions) {
      if (const auto* express = std::get_if<ExpressInterest>(&action))
        queue.push_back(consumer.makeInterest(express->name));
      else
        completed = true;
    }
  };
  enqueue(actions);

  while (!queue.empty()) {
    Interest interest = queue.front();
    queue.pop_front();
    std::optional<Data> response = producer.onInterest(interest);
    REQUIRE_MESSAGE(response.has_value(),
                    "producer cannot answer " << interest.name().toUri());
    ++exchanged;
    enqueue(consumer.onData(*response));
  }

  CHECK(completed);
  return exchanged;
}

} // namespace

TEST_CASE("producer serves every object of its bundle")
{
  Producer producer = makeProducer();
  TorrentBundle reference = buildTorrent(defaultParams());

  CHECK(producer.servedPrefix() == Name::fromUri("/NTORRENT/demo"));
  CHECK(producer.objectCount() == 14);

  for (const Name& name : reference.allNames()) {
    auto response = producer.onInterest(Interest(name, 1));
    REQUIRE(response.has_value());
    CHECK(fullName(*response) == name);
  }

  // 2 segment + 4 manifest + 8 data requests, classified
  CHECK(producer.interestsByType()[size_t(InterestType::TorrentSegmentReq)] == 2);
  CHECK(producer.interestsByType()[size_t(InterestType::FileManifestReq)] == 4);
  CHECK(producer.interestsByType()[size_t(InterestType::DataPacketReq)] == 8);
  CHECK(producer.interestsByType()[size_t(InterestType::Unknown)] == 0);
}

TEST_CASE("producer answers nothing for unknown names")
{
  Producer producer = makeProducer();

  // same wire name, wrong digest
  Name almost = producer.bundle().firstSegmentName.wirePrefix();
  almost.appendDigest(sha256(Bytes{0xff}));
  CHECK_FALSE(producer.onInterest(Interest(almost, 1)).has_value());

  Name foreign = Name::fromUri("/NTORRENT/demo/nope");
  foreign.appendDigest(sha256(Bytes{}));
  CHECK_FALSE(producer.onInterest(Interest(foreign, 2)).has_value());

  CHECK(producer.interestsByType()[size_t(InterestType::Unknown)] == 1);
}

TEST_CASE("producer rejects objects outside its prefix")
{
  TorrentBundle stray = buildTorrent(defaultParams());
  CHECK_THROWS_AS(Producer(std::move(stray), "other"), std::invalid_argument);
}

TEST_CASE("consumer bootstrap")
{
  Consumer consumer(defaultParams(), 42);
  CHECK_FALSE(consumer.started());
  CHECK_THROWS_AS(consumer.firstSegmentName(), std::logic_error);
  CHECK(consumer.expectedPackets() == 8);

  auto actions = consumer.start();
  CHECK(consumer.started());
  REQUIRE(actions.size() == 1);
  const auto* express = std::get_if<ExpressInterest>(&actions[0]);
  REQUIRE(express != nullptr);

  // the bootstrap name is the first torrent segment, digest included
  TorrentBundle reference = buildTorrent(defaultParams());
  CHECK(express->name == reference.firstSegmentName);
  CHECK(consumer.firstSegmentName() == reference.firstSegmentName);
  CHECK(consumer.phase() == ConsumerPhase::FetchingTorrentFile);

  CHECK_THROWS_AS(consumer.start(), std::logic_error);
}

TEST_CASE("each name is requested at most once")
{
  Consumer consumer(defaultParams(), 42);
  consumer.start();

  Name name = buildTorrent(defaultParams()).firstSegmentName;
  Interest interest = consumer.makeInterest(name);
  CHECK(interest.name() == name);
  CHECK(consumer.pending().count(name) == 1);
  CHECK(consumer.requested().count(name) == 1);

  CHECK_THROWS_AS(consumer.makeInterest(name), AlreadyRequested);
}

TEST_CASE("nonces are reproducible from the seed")
{
  Name name = buildTorrent(defaultParams()).firstSegmentName;

  Consumer a(defaultParams(), 7);
  Consumer b(defaultParams(), 7);
  Consumer c(defaultParams(), 8);

  uint32_t nonceA = a.makeInterest(name).nonce();
  uint32_t nonceB = b.makeInterest(name).nonce();
  uint32_t nonceC = c.makeInterest(name).nonce();
  CHECK(nonceA == nonceB);
  CHECK(nonceA != nonceC); // different seeds diverge (with near certainty)
}

TEST_CASE("consumer walks all three phases to completion")
{
  Producer producer = makeProducer();
  Consumer consumer(defaultParams(), 1);

  CHECK(consumer.phase() == ConsumerPhase::FetchingTorrentFile);
  size_t exchanged = pump(consumer, producer, consumer.start());

  CHECK(exchanged == 14);
  CHECK(consumer.phase() == ConsumerPhase::Done);
  CHECK(consumer.receivedSegments().size() == 2);
  CHECK(consumer.receivedManifests().size() == 4);
  CHECK(consumer.receivedPackets().size() == 8);
  CHECK(consumer.pending().empty());
  CHECK(consumer.requested().size() == 14);
  CHECK(consumer.digestMismatches() == 0);

  // the queues preserved catalog order
  TorrentBundle reference = buildTorrent(defaultParams());
  std::vector<Name> manifestNames;
  for (const Data& m : reference.manifests)
    manifestNames.push_back(fullName(m));
  CHECK(consumer.manifestQueue() == manifestNames);
  std::vector<Name> packetNames;
  for (const Data& p : reference.dataPackets)
    packetNames.push_back(fullName(p));
  CHECK(consumer.dataQueue() == packetNames);
}

TEST_CASE("phases advance in order while pumping")
{
  Producer producer = makeProducer();
  Consumer consumer(defaultParams(), 1);

  std::vector<ConsumerPhase> observed{consumer.phase()};
  std::deque<Interest> queue;
  auto enqueue = [&](const std::vector<AppAction>& actions) {
    for (const AppAction& action : actions)
      if (const auto* express = std::get_if<ExpressInterest>(&action))
        queue.push_back(consumer.makeInterest(express->name));
  };

  enqueue(consumer.start());
  while (!queue.empty()) {
    Interest interest = queue.front();
    queue.pop_front();
    auto response = producer.onInterest(interest);
    REQUIRE(response.has_value());
    enqueue(consumer.onData(*response));
    if (consumer.phase() != observed.back())
      observed.push_back(consumer.phase());
  }

  CHECK(observed == std::vector<ConsumerPhase>{ConsumerPhase::FetchingTorrentFile,
                                               ConsumerPhase::FetchingManifests,
                                               ConsumerPhase::FetchingData,
                                               ConsumerPhase::Done});
}

TEST_CASE("phase names")
{
  CHECK(to_string(ConsumerPhase::FetchingTorrentFile) == "fetching-torrent-file");
  CHECK(to_string(ConsumerPhase::FetchingManifests) == "fetching-manifests");
  CHECK(to_string(ConsumerPhase::FetchingData) == "fetching-data");
  CHECK(to_string(ConsumerPhase::Done) == "done");
}

TEST_CASE("altered payloads are rejected and the name released")
{
  Producer producer = makeProducer();
  Consumer consumer(defaultParams(), 1);
  consumer.start();

  Name name = consumer.firstSegmentName();
  consumer.makeInterest(name);
  std::optional<Data> genuine = producer.onInterest(Interest(name, 9));
  REQUIRE(genuine.has_value());

  Bytes altered = genuine->payload();
  altered.back() ^= 0x01;
  Data tampered(genuine->wireName(), genuine->contentType(), altered);

  auto actions = consumer.onData(tampered);
  CHECK(actions.empty());
  CHECK(consumer.digestMismatches() == 1);
  CHECK(consumer.receivedSegments().empty());

  // the name is unrequested again: a retry is possible and the genuine
  // object then satisfies it
  CHECK(consumer.pending().empty());
  CHECK(consumer.requested().empty());
  CHECK_NOTHROW(consumer.makeInterest(name));
  auto accepted = consumer.onData(*genuine);
  CHECK(consumer.receivedSegments().size() == 1);
  CHECK_FALSE(accepted.empty()); // asks for the next segment
}

TEST_CASE("unsolicited data throws")
{
  Consumer consumer(defaultParams(), 1);
  consumer.start();

  Data stranger(Name::fromUri("/NTORRENT/demo/file0/data/0"), ContentType::DataPacket,
                Bytes{1, 2, 3});
  CHECK_THROWS_AS(consumer.onData(stranger), UnsolicitedData);
}

TEST_CASE("manifest pointing outside the cataloged chain is rejected")
{
  Consumer consumer(defaultParams(), 1);

  // a manifest whose next pointer names an object the torrent file never listed
  Name rogueNext = manifestName("demo", "file9", 1);
  rogueNext.appendDigest(sha256(Bytes{0x13}));
  Name entry = dataPacketName("demo", "file9", 0);
  entry.appendDigest(sha256(Bytes{0x14}));
  FileManifest rogue(0, "file9", {entry}, rogueNext);
  Data rogueData(manifestName("demo", "file9", 0), ContentType::FileManifest,
                 encodeManifest(rogue));

  consumer.makeInterest(fullName(rogueData));
  CHECK_THROWS_AS(consumer.onData(rogueData), ChainMismatch);
}

TEST_CASE("data counts toward completion only when all packets arrive")
{
  // a one-packet torrent completes on the very first data packet
  TorrentParams tiny;
  tiny.torrentName = "tiny";
  tiny.numFiles = 1;
  tiny.fileSize = 1;
  tiny.packetSize = 1;
  tiny.namesPerManifest = 1;
  tiny.namesPerSegment = 1;

  Producer producer(buildTorrent(tiny), "tiny");
  Consumer consumer(tiny, 1);
  CHECK(consumer.expectedPackets() == 1);

  size_t exchanged = pump(consumer, producer, consumer.start());
  CHECK(exchanged == 3); // one segment, one manifest, one packet
  CHECK(consumer.phase() == ConsumerPhase::Done);
}
