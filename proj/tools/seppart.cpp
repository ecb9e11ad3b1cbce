#include <iostream>

#include "seppart/cli.hpp"

int main(int argc, char** argv) { return seppart::cli::run(argc, argv, std::cout, std::cerr); }
