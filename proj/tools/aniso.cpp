#include <iostream>

#include "aniso/cli/commands.hpp"

int main(int argc, char** argv) { return aniso::cli::run_cli(argc, argv, std::cout, std::cerr); }
