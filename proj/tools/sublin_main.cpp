#include <iostream>

#include "sublin/cli/commands.hpp"

int main(int argc, char** argv) { return sublin::cli::run(argc, argv, std::cout, std::cerr); }
