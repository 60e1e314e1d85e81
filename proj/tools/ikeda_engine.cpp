#include <iostream>

#include "ikeda/cli.hpp"

int main(int argc, char** argv) { return ikeda::run_cli(argc, argv, std::cout, std::cerr); }
