#include <iostream>

#include "gwcb_cli/cli.hpp"

int main(int argc, char** argv) { return gwcb::cli::run(argc, argv, std::cout, std::cerr); }
