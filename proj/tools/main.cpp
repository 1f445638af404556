#include <iostream>

#include "mdastyl/cli.hpp"

int main(int argc, char** argv) { return mdastyl::run_cli(argc, argv, std::cout, std::cerr); }
