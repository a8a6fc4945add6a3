#include "ntorrent/trace.hpp"

#include <cinttypes>
#include <cstdio>

namespace ntorrent {

std::string_view
to_string(TraceDir dir)
{
  return dir == TraceDir::Send ? "send" : "recv";
}

std::string_view
to_string(PacketKind kind)
{
  return kind == PacketKind::Interest ? "interest" : "data";
}

std::string
traceToCsv(const std::vector<TraceRecord>& records)
{
  std::string csv = "time,node,dir,kind,name,bytes\n";
  char line[64];
  for (const auto& r : records) {
    std::snprintf(line, sizeof(line), "%.9f,%d,", r.time, r.node);
    csv += line;
    csv += to_string(r.dir);
    csv += ',';
    csv += to_string(r.kind);
    csv += ',';
    csv += r.name.toUri();
    csv += ',';
    csv += std::to_string(r.bytes);
    csv += '\n';
  }
  return csv;
}

} // namespace ntorrent
