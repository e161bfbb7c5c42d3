#include <iostream>

#include "detlinks/cli.hpp"

int main(int argc, char** argv) { return detlinks::run_cli(argc, argv, std::cout, std::cerr); }
