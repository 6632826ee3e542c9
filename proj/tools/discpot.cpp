#include <iostream>

#include "discpot/cli.hpp"

int main(int argc, char** argv) { return discpot::run_cli(argc, argv, std::cout, std::cerr); }
