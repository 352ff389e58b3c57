#include <iostream>

#include "dybrace/cli.hpp"

int main(int argc, char** argv) { return dybrace::run_cli(argc, argv, std::cout, std::cerr); }
