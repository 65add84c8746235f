#include <iostream>

#include "diamonds/cli.hpp"

int main(int argc, char** argv) { return diamonds::cli::run(argc, argv, std::cout, std::cerr); }
