#include <iostream>
#include <string>
#include <vector>

#include "hcplab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return hcplab::cli::run(args, std::cout, std::cerr);
}
