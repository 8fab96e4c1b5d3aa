#include <iostream>

#include "arcwalk/cli.hpp"

int main(int argc, char** argv) { return arcwalk::cli_main(argc, argv, std::cout, std::cerr); }
