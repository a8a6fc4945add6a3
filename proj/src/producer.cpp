#include "ntorrent/producer.hpp"

namespace ntorrent {

Producer::Producer(TorrentBundle bundle, const std::string& torrentName)
  : m_bundle(std::move(bundle))
{
  m_servedPrefix = Name().append(kNamespaceRoot).append(torrentName);

  auto index = [this](const std::vector<Data>& packets) {
    for (const Data& d : packets) {
      Name name = fullName(d);
      if (!m_servedPrefix.isPrefixOf(name))
        throw std::invalid_argument("bundle object '" + name.toUri() +
                                    "' is outside the served prefix");
      m_lookup.emplace(std::move(name), &d);
    }
  };
  index(m_bundle.torrentSegments);
  index(m_bundle.manifests);
  index(m_bundle.dataPackets);
}

std::optional<Data>
Producer::onInterest(const Interest& interest)
{
  ++m_interestsByType[static_cast<size_t>(classifyName(interest.name()))];

  auto it = m_lookup.find(interest.name());
  if (it == m_lookup.end())
    return std::nullopt;
  return *it->second;
}

} // namespace ntorrent
