#include <iostream>

#include "ufx/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ufx::cli::dispatch(args, std::cout, std::cerr);
}
