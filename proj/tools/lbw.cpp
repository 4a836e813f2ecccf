#include <iostream>

#include "lbw/cli.hpp"

int main(int argc, char** argv) { return lbw::run_cli(argc, argv, std::cout, std::cerr); }
