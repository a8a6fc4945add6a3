#include "ntorrent/fib.hpp"

#include <stdexcept>

namespace ntorrent {

void
Fib::insert(const Name& prefix, std::vector<FaceId> nextHops)
{
  if (nextHops.empty())
    throw std::invalid_argument("FIB entry needs at least one next hop");
  m_entries[prefix] = std::move(nextHops);
}

std::optional<FaceId>
Fib::longestPrefixMatch(const Name& name) const
{
  // walk candidate prefixes longest-first; the map holds few entries
  for (size_t length = name.size() + 1; length-- > 0;) {
    auto it = m_entries.find(name.getPrefix(length));
    if (it != m_entries.end())
      return it->second.front();
  }
  return std::nullopt;
}

} // namespace ntorrent
