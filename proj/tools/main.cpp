#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return pfpos::cli::run(argc, argv, std::cout, std::cerr); }
