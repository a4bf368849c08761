#include <iostream>

#include "evo/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return evo::dispatch(args, std::cout, std::cerr);
}
