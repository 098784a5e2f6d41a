#include <iostream>

#include "radialgeo/cli.hpp"

int main(int argc, char** argv) { return radialgeo::cli_main(argc, argv, std::cout, std::cerr); }
