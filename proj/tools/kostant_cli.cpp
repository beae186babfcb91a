#include <iostream>

#include "kostant/cli.hpp"

int main(int argc, char** argv) { return kostant::run_cli(argc, argv, std::cout, std::cerr); }
