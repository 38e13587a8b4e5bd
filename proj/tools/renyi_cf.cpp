#include <iostream>

#include "renyi_cf/cli.hpp"

int main(int argc, char** argv) { return renyi::cli_main(argc, argv, std::cout, std::cerr); }
