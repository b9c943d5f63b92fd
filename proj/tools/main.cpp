#include <unistd.h>

#include <iostream>

#include "cli_app.hpp"

int main(int argc, char** argv) {
  return acr::cli::run(argc, argv, std::cout, std::cerr, isatty(STDOUT_FILENO) == 1);
}
