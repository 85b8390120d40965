#include <iostream>

#include "scoreseq/cli.hpp"

int main(int argc, char** argv) { return scoreseq::run_cli(argc, argv, std::cout, std::cerr); }
