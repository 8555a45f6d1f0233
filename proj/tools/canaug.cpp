#include <iostream>

#include "canaug/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return canaug::cli_run(std::move(args), std::cout, std::cerr);
}
