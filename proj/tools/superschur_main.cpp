#include "superschur/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return superschur::run_cli(argc, argv, std::cout, std::cerr); }
