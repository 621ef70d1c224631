#include <iostream>

#include "bbi/cli/app.hpp"

int main(int argc, char** argv) { return bbi::cli::run_cli(argc, argv, std::cout, std::cerr); }
