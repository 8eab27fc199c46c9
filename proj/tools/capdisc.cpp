#include <iostream>

#include "capdisc/cli.hpp"

int main(int argc, char** argv) { return capdisc::run_cli(argc, argv, std::cout, std::cerr); }
