#include "ntorrent/torrent-objects.hpp"

#include "doctest.h"

using namespace ntorrent;

namespace {

Name
fullNameOf(const std::string& uri, uint8_t seed = 0)
{
  Name name = Name::fromUri(uri);
  name.appendDigest(sha256(Bytes{seed}));
  return name;
}

// raw TLV builder for malformed-wire cases
Bytes
rawBlock(uint8_t type, const Bytes& value)
{
  Bytes out;
  out.push_back(type);
  out.push_back(static_cast<uint8_t>(value.size() >> 24));
  out.push_back(static_cast<uint8_t>(value.size() >> 16));
  out.push_back(static_cast<uint8_t>(value.size() >> 8));
  out.push_back(static_cast<uint8_t>(value.size()));
  out.insert(out.end(), value.begin(), value.end());
  return out;
}

Bytes
operator+(Bytes a, const Bytes& b)
{
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Bytes
uint64Block(uint8_t type, uint64_t v)
{
  Bytes value;
  for (int shift = 56; shift >= 0; shift -= 8)
    value.push_back(static_cast<uint8_t>(v >> shift));
  return rawBlock(type, value);
}

} // namespace

TEST_CASE("object name builders")
{
  CHECK(torrentSegmentName("demo", 0).toUri() == "/NTORRENT/demo/torrent-file/0");
  CHECK(torrentSegmentName("demo", 17).toUri() == "/NTORRENT/demo/torrent-file/17");
  CHECK(manifestName("demo", "file0", 2).toUri() == "/NTORRENT/demo/file0/manifest/2");
  CHECK(dataPacketName("demo", "file1", 5).toUri() == "/NTORRENT/demo/file1/data/5");

  // torrent names and file paths are single components
  CHECK_THROWS_AS(torrentSegmentName("", 0), std::invalid_argument);
  CHECK_THROWS_AS(torrentSegmentName("a/b", 0), std::invalid_argument);
  CHECK_THROWS_AS(manifestName("demo", "a/b", 0), std::invalid_argument);
  CHECK_THROWS_AS(dataPacketName("demo", "", 0), std::invalid_argument);
}

TEST_CASE("torrent segment construction rules")
{
  Name entry = fullNameOf("/NTORRENT/t/file0/manifest/0");
  Name next = fullNameOf("/NTORRENT/t/torrent-file/1");

  CHECK_NOTHROW(TorrentFileSegment(0, {entry}, next));
  CHECK_NOTHROW(TorrentFileSegment(0, {entry}, std::nullopt));

  // the catalog must name exact objects, and must not be empty
  CHECK_THROWS_AS(TorrentFileSegment(0, {}, std::nullopt), std::invalid_argument);
  CHECK_THROWS_AS(TorrentFileSegment(0, {entry.wirePrefix()}, std::nullopt),
                  std::invalid_argument);
  CHECK_THROWS_AS(TorrentFileSegment(0, {entry}, next.wirePrefix()), std::invalid_argument);
}

TEST_CASE("file manifest construction rules")
{
  Name entry = fullNameOf("/NTORRENT/t/file0/data/0");
  Name next = fullNameOf("/NTORRENT/t/file0/manifest/1");

  CHECK_NOTHROW(FileManifest(0, "file0", {entry}, next));
  CHECK_THROWS_AS(FileManifest(0, "file0", {}, std::nullopt), std::invalid_argument);
  CHECK_THROWS_AS(FileManifest(0, "file0", {entry.wirePrefix()}, std::nullopt),
                  std::invalid_argument);
  CHECK_THROWS_AS(FileManifest(0, "file0", {entry}, next.wirePrefix()),
                  std::invalid_argument);
}

TEST_CASE("torrent segment round trip")
{
  std::vector<Name> catalog{fullNameOf("/NTORRENT/t/file0/manifest/0", 1),
                            fullNameOf("/NTORRENT/t/file0/manifest/1", 2),
                            fullNameOf("/NTORRENT/t/file1/manifest/0", 3)};

  SUBCASE("with a next pointer")
  {
    TorrentFileSegment segment(4, catalog, fullNameOf("/NTORRENT/t/torrent-file/5", 9));
    CHECK(decodeTorrentSegment(encodeTorrentSegment(segment)) == segment);
  }
  SUBCASE("terminal segment")
  {
    TorrentFileSegment segment(4, catalog, std::nullopt);
    TorrentFileSegment decoded = decodeTorrentSegment(encodeTorrentSegment(segment));
    CHECK(decoded == segment);
    CHECK(decoded.segmentNumber() == 4);
    CHECK(decoded.manifestCatalog() == catalog);
    CHECK_FALSE(decoded.nextSegmentPtr().has_value());
  }
}

TEST_CASE("file manifest round trip")
{
  std::vector<Name> catalog{fullNameOf("/NTORRENT/t/file7/data/0", 1),
                            fullNameOf("/NTORRENT/t/file7/data/1", 2)};

  SUBCASE("with a next pointer")
  {
    FileManifest manifest(0, "file7", catalog, fullNameOf("/NTORRENT/t/file7/manifest/1", 9));
    CHECK(decodeManifest(encodeManifest(manifest)) == manifest);
  }
  SUBCASE("terminal manifest")
  {
    FileManifest manifest(3, "file7", catalog, std::nullopt);
    FileManifest decoded = decodeManifest(encodeManifest(manifest));
    CHECK(decoded == manifest);
    CHECK(decoded.manifestNumber() == 3);
    CHECK(decoded.filePath() == "file7");
    CHECK_FALSE(decoded.nextManifestPtr().has_value());
  }
}

TEST_CASE("malformed objects are rejected")
{
  Name entry = fullNameOf("/NTORRENT/t/file0/manifest/0");
  TorrentFileSegment segment(0, {entry}, std::nullopt);
  Bytes good = encodeTorrentSegment(segment);

  SUBCASE("empty buffer")
  {
    CHECK_THROWS_AS(decodeTorrentSegment(Bytes{}), MalformedObject);
    CHECK_THROWS_AS(decodeManifest(Bytes{}), MalformedObject);
  }
  SUBCASE("wrong object type")
  {
    FileManifest manifest(0, "file0", {fullNameOf("/NTORRENT/t/file0/data/0")}, std::nullopt);
    CHECK_THROWS_AS(decodeTorrentSegment(encodeManifest(manifest)), MalformedObject);
    CHECK_THROWS_AS(decodeManifest(good), MalformedObject);
  }
  SUBCASE("truncated wire")
  {
    for (size_t cut = 1; cut < good.size(); cut += 7) {
      Bytes prefix(good.begin(), good.begin() + cut);
      CHECK_THROWS_AS(decodeTorrentSegment(prefix), MalformedObject);
    }
  }
  SUBCASE("trailing garbage")
  {
    Bytes wire = good;
    wire.push_back(0x00);
    CHECK_THROWS_AS(decodeTorrentSegment(wire), MalformedObject);
  }
  SUBCASE("segment with an empty catalog")
  {
    Bytes wire = rawBlock(0x80, uint64Block(0x81, 0));
    CHECK_THROWS_AS(decodeTorrentSegment(wire), MalformedObject);
  }
  SUBCASE("manifest with an empty catalog")
  {
    Bytes wire = rawBlock(0x90, uint64Block(0x91, 0) + rawBlock(0x92, toBytes("file0")));
    CHECK_THROWS_AS(decodeManifest(wire), MalformedObject);
  }
  SUBCASE("catalog entry that is not a full name")
  {
    Bytes wire = rawBlock(0x80, uint64Block(0x81, 0) +
                                  rawBlock(0x82, encodeName(Name::fromUri("/no/digest"))));
    CHECK_THROWS_AS(decodeTorrentSegment(wire), MalformedObject);
  }
}

TEST_CASE("interest classification")
{
  CHECK(to_string(InterestType::TorrentSegmentReq) == "torrent-segment");
  CHECK(to_string(InterestType::FileManifestReq) == "file-manifest");
  CHECK(to_string(InterestType::DataPacketReq) == "data-packet");
  CHECK(to_string(InterestType::Unknown) == "unknown");

  Name segment = torrentSegmentName("demo", 0);
  Name manifest = manifestName("demo", "file0", 1);
  Name packet = dataPacketName("demo", "file1", 2);

  CHECK(classifyName(segment) == InterestType::TorrentSegmentReq);
  CHECK(classifyName(manifest) == InterestType::FileManifestReq);
  CHECK(classifyName(packet) == InterestType::DataPacketReq);

  // appending the digest never changes the classification
  for (Name name : {segment, manifest, packet}) {
    InterestType without = classifyName(name);
    name.appendDigest(sha256(Bytes{1}));
    CHECK(classifyName(name) == without);
  }

  CHECK(classifyName(Name()) == InterestType::Unknown);
  CHECK(classifyName(Name::fromUri("/NTORRENT")) == InterestType::Unknown);
  CHECK(classifyName(Name::fromUri("/NTORRENT/demo")) == InterestType::Unknown);
  CHECK(classifyName(Name::fromUri("/other/demo/torrent-file/0")) == InterestType::Unknown);
  CHECK(classifyName(Name::fromUri("/NTORRENT/demo/other/0")) == InterestType::Unknown);
  CHECK(classifyName(Name::fromUri("/NTORRENT/demo/file0/other/0")) == InterestType::Unknown);
}
