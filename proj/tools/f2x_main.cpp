#include <iostream>

#include "f2x/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return f2x::run_cli(args, std::cout, std::cerr);
}
