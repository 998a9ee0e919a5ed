#include <iostream>
#include <string>
#include <vector>

#include "orthocomp/cli.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return orthocomp::cli::run(args, std::cout, std::cerr);
}
