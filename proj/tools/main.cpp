#include <iostream>

#include "orbitslice/cli.hpp"

int main(int argc, char** argv) { return orbitslice::run_cli(argc, argv, std::cout, std::cerr); }
