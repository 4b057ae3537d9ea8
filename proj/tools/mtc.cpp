#include "mtc/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return mtc::run_cli(argc, argv, std::cout, std::cerr); }
