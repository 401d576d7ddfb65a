#include <iostream>

#include "lyndon/cli.hpp"

int main(int argc, char** argv) { return lyndon::run_cli(argc, argv, std::cout, std::cerr); }
