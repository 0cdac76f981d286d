#include <iostream>

#include "gfcodes/cli.hpp"

int main(int argc, char** argv) { return gfcodes::cli::run(argc, argv, std::cout, std::cerr); }
