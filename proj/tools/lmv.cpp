#include <iostream>

#include "lmv/cli.hpp"

int main(int argc, char** argv) { return lmv::cli::run(argc, argv, std::cout, std::cerr); }
