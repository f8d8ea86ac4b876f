#include <iostream>

#include "orecalc/cli.hpp"

int main(int argc, char** argv) { return orecalc::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
