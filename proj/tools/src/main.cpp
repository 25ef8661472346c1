#include <iostream>

#include "mhol/cli.hpp"

int main(int argc, char** argv) { return mhol::cli::main_entry(argc, argv, std::cout, std::cerr); }
