#include <iostream>

#include "closedgraphs/cli.hpp"

int main(int argc, char** argv) { return closedgraphs::cli::run(argc, argv, std::cout, std::cerr); }
