#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return msf::cli::run(argc, argv, std::cout, std::cerr); }
