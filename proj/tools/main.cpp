#include <iostream>

#include "dualbasis/cli/app.hpp"

int main(int argc, char** argv) { return dualbasis::cli::run(argc, argv, std::cout, std::cerr); }
