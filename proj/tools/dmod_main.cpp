#include <iostream>

#include "dmod/cli.hpp"

int main(int argc, char** argv) { return dmod::cli::run(argc, argv, std::cout, std::cerr); }
