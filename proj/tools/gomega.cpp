#include <iostream>

#include "gomega/cli.hpp"

int main(int argc, char** argv) { return gomega::dispatch(argc, argv, std::cout, std::cerr); }
