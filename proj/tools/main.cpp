#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hexafern::cli::run(argc, argv, std::cout, std::cerr); }
