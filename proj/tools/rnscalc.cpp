#include <iostream>
#include <string>
#include <vector>

#include "rns/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rns::run_cli(std::move(args), std::cout, std::cerr);
}
