#include <iostream>

#include "hopfkit/cli.hpp"

int main(int argc, char** argv) { return hopfkit::run_cli(argc, argv, std::cout, std::cerr); }
