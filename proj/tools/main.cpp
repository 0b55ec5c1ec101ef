#include <iostream>

#include "monoball/cli.hpp"

int main(int argc, char** argv) { return monoball::cli_main(argc, argv, std::cout, std::cerr); }
