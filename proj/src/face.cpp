#include "ntorrent/face.hpp"

namespace ntorrent {

FaceCounters&
FaceCounters::operator+=(const FaceCounters& other)
{
  interestsIn += other.interestsIn;
  interestsOut += other.interestsOut;
  dataIn += other.dataIn;
  dataOut += other.dataOut;
  bytesIn += other.bytesIn;
  bytesOut += other.bytesOut;
  return *this;
}

} // namespace ntorrent
