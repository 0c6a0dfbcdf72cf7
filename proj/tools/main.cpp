#include <iostream>
#include <string>
#include <vector>

#include "sumcomp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sumcomp::run_cli(args, std::cout, std::cerr);
}
