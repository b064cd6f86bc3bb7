#include "loopstab/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return loopstab::cli::run(argc, argv, std::cout, std::cerr); }
