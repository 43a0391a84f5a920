#include <iostream>

#include "qsolv/strat/cli.hpp"

int main(int argc, char** argv) { return qsolv::strat::cli_run(argc, argv, std::cout, std::cerr); }
