#include <iostream>

#include "acs/cli/commands.hpp"

int main(int argc, char** argv) { return acs::cli::run_cli(argc, argv, std::cout, std::cerr); }
