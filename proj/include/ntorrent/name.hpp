#ifndef NTORRENT_NAME_HPP
#define NTORRENT_NAME_HPP

#include "ntorrent/digest.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace ntorrent {

/// Leading text of an implicit-digest component; the remainder is 64 lowercase hex chars.
constexpr std::string_view kDigestComponentPrefix = "sha256digest=";

bool isDigestComponent(std::string_view component);
std::string makeDigestComponent(const Sha256Digest& digest);

/** \brief Hierarchical object name: an ordered list of nonempty components.
 *
 *  A "full name" ends in an implicit-digest component; a "wire name" does not.
 *  Data packets carry wire names, interests carry full names.
 */
class Name
{
public:
  Name() = default;

  explicit Name(std::vector<std::string> components);

  /// Parses "/a/b/c"; throws std::invalid_argument on empty components.
  static Name fromUri(std::string_view uri);

  Name& append(std::string_view component);
  Name& appendNumber(uint64_t number);
  Name& appendDigest(const Sha256Digest& digest);

  bool empty() const { return m_components.empty(); }
  size_t size() const { return m_components.size(); }
  const std::string& at(size_t i) const;
  const std::vector<std::string>& components() const { return m_components; }

  Name getPrefix(size_t nComponents) const;
  bool isPrefixOf(const Name& other) const;

  /// True when the last component is an implicit-digest component.
  bool isFullName() const;

  /// Full name minus the digest component; throws std::logic_error when not a full name.
  Name wirePrefix() const;

  /// Hex part of the trailing digest component; throws std::logic_error when not a full name.
  std::string digestHex() const;

  std::string toUri() const;

  auto operator<=>(const Name&) const = default;

private:
  std::vector<std::string> m_components;
};

std::ostream& operator<<(std::ostream& os, const Name& name);

} // namespace ntorrent

#endif // NTORRENT_NAME_HPP
