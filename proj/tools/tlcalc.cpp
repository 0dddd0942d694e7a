#include <iostream>

#include "tl/cli.hpp"

int main(int argc, char** argv) { return tl::run_cli(argc, argv, std::cout, std::cerr); }
