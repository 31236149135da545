#include <iostream>

#include "rfib/cli.hpp"

int main(int argc, char** argv) { return rfib::cli::main(argc, argv, std::cout, std::cerr); }
