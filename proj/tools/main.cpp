#include <iostream>

#include "fraxform/cli/cli.hpp"

int main(int argc, char** argv) { return fraxform::cli::run(argc, argv, std::cout, std::cerr); }
