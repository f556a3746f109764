#include "causal/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return causal::run_cli(argc, argv, std::cout, std::cerr); }
