#include <iostream>
#include <string>
#include <vector>

#include "hatgame/cli.hpp"

int main(int argc, char** argv) {
  return hatgame::run_command(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
