#ifndef NTORRENT_CONTENT_STORE_HPP
#define NTORRENT_CONTENT_STORE_HPP

#include "ntorrent/packet.hpp"

#include <map>
#include <vector>

namespace ntorrent {

/** \brief Unbounded exact-match cache of Data packets, keyed by full name.
 */
class ContentStore
{
public:
  /// Inserts d under its full name; reinserting an already-stored name is a no-op.
  /// Returns true when the entry is new.
  bool insert(const Data& d);

  /// Exact-match lookup by full name; nullptr when absent.
  const Data* lookup(const Name& fullName) const;

  bool contains(const Name& fullName) const;

  size_t size() const { return m_byName.size(); }

  /// Stored full names in insertion order.
  const std::vector<Name>& names() const { return m_insertionOrder; }

  /// Recomputes every entry's full name; throws std::logic_error on any mismatch.
  void verify() const;

private:
  std::map<Name, Data> m_byName;
  std::vector<Name> m_insertionOrder;
};

} // namespace ntorrent

#endif // NTORRENT_CONTENT_STORE_HPP
