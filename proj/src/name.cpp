#include "ntorrent/name.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace ntorrent {

namespace {

bool
isLowercaseHex(std::string_view s)
{
  for (char c : s) {
    if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f')))
      return false;
  }
  return true;
}

} // namespace

bool
isDigestComponent(std::string_view component)
{
  if (component.size() != kDigestComponentPrefix.size() + 64)
    return false;
  if (component.substr(0, kDigestComponentPrefix.size()) != kDigestComponentPrefix)
    return false;
  return isLowercaseHex(component.substr(kDigestComponentPrefix.size()));
}

std::string
makeDigestComponent(const Sha256Digest& digest)
{
  return std::string(kDigestComponentPrefix) + toHex(digest.data(), digest.size());
}

Name::Name(std::vector<std::string> components)
  : m_components(std::move(components))
{
  for (const auto& c : m_components) {
    if (c.empty())
      throw std::invalid_argument("name component must be nonempty");
  }
}

Name
Name::fromUri(std::string_view uri)
{
  Name name;
  if (uri.empty() || uri == "/")
    return name;

  size_t pos = 0;
  if (uri[0] == '/')
    pos = 1;

  while (pos <= uri.size()) {
    size_t slash = uri.find('/', pos);
    std::string_view component =
      (slash == std::string_view::npos) ? uri.substr(pos) : uri.substr(pos, slash - pos);
    if (component.empty())
      throw std::invalid_argument("empty component in name URI '" + std::string(uri) + "'");
    name.append(component);
    if (slash == std::string_view::npos)
      break;
    pos = slash + 1;
  }
  return name;
}

Name&
Name::append(std::string_view component)
{
  if (component.empty())
    throw std::invalid_argument("name component must be nonempty");
  m_components.emplace_back(component);
  return *this;
}

Name&
Name::appendNumber(uint64_t number)
{
  return append(std::to_string(number));
}

Name&
Name::appendDigest(const Sha256Digest& digest)
{
  return append(makeDigestComponent(digest));
}

const std::string&
Name::at(size_t i) const
{
  if (i >= m_components.size())
    throw std::out_of_range("name component index " + std::to_string(i) + " out of range");
  return m_components[i];
}

Name
Name::getPrefix(size_t nComponents) const
{
  if (nComponents > m_components.size())
    throw std::out_of_range("prefix length exceeds name size");
  return Name(std::vector<std::string>(m_components.begin(), m_components.begin() + nComponents));
}

bool
Name::isPrefixOf(const Name& other) const
{
  if (m_components.size() > other.m_components.size())
    return false;
  return std::equal(m_components.begin(), m_components.end(), other.m_components.begin());
}

bool
Name::isFullName() const
{
  return !m_components.empty() && isDigestComponent(m_components.back());
}

Name
Name::wirePrefix() const
{
  if (!isFullName())
    throw std::logic_error("name '" + toUri() + "' has no digest component");
  return getPrefix(m_components.size() - 1);
}

std::string
Name::digestHex() const
{
  if (!isFullName())
    throw std::logic_error("name '" + toUri() + "' has no digest component");
  return m_components.back().substr(kDigestComponentPrefix.size());
}

std::string
Name::toUri() const
{
  if (m_components.empty())
    return "/";
  std::string uri;
  for (const auto& c : m_components) {
    uri += '/';
    uri += c;
  }
  return uri;
}

std::ostream&
operator<<(std::ostream& os, const Name& name)
{
  return os << name.toUri();
}

} // namespace ntorrent
