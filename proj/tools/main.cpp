#include <iostream>

#include "qsym/cli.hpp"

int main(int argc, char** argv) { return qsym::run_cli(argc, argv, std::cout, std::cerr); }
