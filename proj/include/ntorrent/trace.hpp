#ifndef NTORRENT_TRACE_HPP
#define NTORRENT_TRACE_HPP

#include "ntorrent/name.hpp"

#include <cstdint>
#include <vector>

namespace ntorrent {

enum class TraceDir {
  Send,
  Recv,
};

enum class PacketKind {
  Interest,
  Data,
};

std::string_view to_string(TraceDir dir);
std::string_view to_string(PacketKind kind);

/// One wire event. Sends are stamped at serialization start, receives at arrival.
struct TraceRecord
{
  double time = 0.0;
  int node = 0;
  TraceDir dir = TraceDir::Send;
  PacketKind kind = PacketKind::Interest;
  Name name;
  uint64_t bytes = 0;
};

/// CSV with header time,node,dir,kind,name,bytes; times printed with 9 decimals.
std::string traceToCsv(const std::vector<TraceRecord>& records);

} // namespace ntorrent

#endif // NTORRENT_TRACE_HPP
