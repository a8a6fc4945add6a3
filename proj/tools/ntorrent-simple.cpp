#include "ntorrent/scenario.hpp"

#include <iostream>

int
main(int argc, char** argv)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  return ntorrent::scenarioMain(args, std::cout, std::cerr);
}
