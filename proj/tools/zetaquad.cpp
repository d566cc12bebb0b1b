#include <iostream>

#include <zetaquad/cli.hpp>

int main(int argc, char** argv) { return zetaquad::cli::run(argc, argv, std::cout, std::cerr); }
