#include <iostream>

#include "ttflow/cli.hpp"

int main(int argc, char** argv) { return ttflow::cli::main(argc, argv, std::cout, std::cerr); }
