#include <iostream>
#include <string>
#include <vector>

#include "lambda/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return lambda::run_cli(args, std::cout, std::cerr);
}
