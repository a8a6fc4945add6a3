#include "ntorrent/content-store.hpp"

namespace ntorrent {

bool
ContentStore::insert(const Data& d)
{
  Name key = fullName(d);
  auto [it, isNew] = m_byName.try_emplace(std::move(key), d);
  if (isNew)
    m_insertionOrder.push_back(it->first);
  return isNew;
}

const Data*
ContentStore::lookup(const Name& fullName) const
{
  auto it = m_byName.find(fullName);
  return it == m_byName.end() ? nullptr : &it->second;
}

bool
ContentStore::contains(const Name& fullName) const
{
  return m_byName.count(fullName) > 0;
}

void
ContentStore::verify() const
{
  for (const auto& [storedName, data] : m_byName) {
    if (fullName(data) != storedName)
      throw std::logic_error("content store entry '" + storedName.toUri() +
                             "' does not match its packet digest");
  }
}

} // namespace ntorrent
