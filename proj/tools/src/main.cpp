#include <iostream>
#include <string>
#include <vector>

#include "steercorr_app/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return steercorr::app::run(args, std::cout, std::cerr);
}
