#ifndef NTORRENT_FIB_HPP
#define NTORRENT_FIB_HPP

#include "ntorrent/face.hpp"
#include "ntorrent/name.hpp"

#include <map>
#include <optional>
#include <vector>

namespace ntorrent {

/** \brief Forwarding table mapping wire-name prefixes to next-hop faces.
 */
class Fib
{
public:
  /// Registers (or replaces) a prefix. nextHops must be nonempty.
  void insert(const Name& prefix, std::vector<FaceId> nextHops);

  /// Next hop of the longest registered prefix of name; first face of that entry.
  std::optional<FaceId> longestPrefixMatch(const Name& name) const;

  size_t size() const { return m_entries.size(); }
  const std::map<Name, std::vector<FaceId>>& entries() const { return m_entries; }

private:
  std::map<Name, std::vector<FaceId>> m_entries;
};

} // namespace ntorrent

#endif // NTORRENT_FIB_HPP
