#ifndef NTORRENT_FACE_HPP
#define NTORRENT_FACE_HPP

#include <cstdint>

namespace ntorrent {

/// Per-node face identifier. Face 0 is reserved for the local application.
using FaceId = int;

struct FaceCounters
{
  uint64_t interestsIn = 0;
  uint64_t interestsOut = 0;
  uint64_t dataIn = 0;
  uint64_t dataOut = 0;
  uint64_t bytesIn = 0;
  uint64_t bytesOut = 0;

  FaceCounters& operator+=(const FaceCounters& other);
};

} // namespace ntorrent

#endif // NTORRENT_FACE_HPP
