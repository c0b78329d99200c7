#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "strsolve/cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return strsolve::cli::run(args, std::cin, std::cout, std::cerr, std::getenv("STRSOLVE_TRACE"));
}
