#include <iostream>

#include "cpd_cli/cli.hpp"

int main(int argc, char **argv)
{
  return cpd::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
