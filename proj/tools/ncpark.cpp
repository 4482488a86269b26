#include <iostream>

#include "ncpark/cli.hpp"

int main(int argc, char** argv) { return ncpark::run_cli(argc, argv, std::cout, std::cerr); }
