#include <iostream>

#include "annigraph/cli.hpp"

int main(int argc, char** argv) { return annigraph::cli_main(argc, argv, std::cout, std::cerr); }
