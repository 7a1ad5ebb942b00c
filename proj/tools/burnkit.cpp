#include <iostream>
#include <string>
#include <vector>

#include "burnkit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return burnkit::cli_main(args, std::cout, std::cerr);
}
