#include <iostream>

#include "k5mf/cli.hpp"

int main(int argc, char** argv) { return k5mf::cli::run(argc, argv, std::cout, std::cerr); }
