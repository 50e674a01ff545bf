#include <iostream>

#include "latcon/cli.hpp"

int main(int argc, char** argv) { return latcon::run_cli(argc, argv, std::cout, std::cerr); }
