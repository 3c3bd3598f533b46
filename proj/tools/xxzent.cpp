#include <iostream>
#include <string>
#include <vector>

#include "xxzent/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return xxzent::run_cli(args, std::cout, std::cerr);
}
