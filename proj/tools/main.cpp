#include <iostream>

#include "tdroute/cli.hpp"

int main(int argc, char** argv) { return tdroute::cli::run(argc, argv, std::cout, std::cerr); }
