#include <iostream>

#include "abwalk/cli/app.hpp"

int main(int argc, char** argv) { return abwalk::run_cli(argc, argv, std::cout, std::cerr); }
