#include <iostream>
#include <vector>

#include "oigcli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return oig::run_cli(args, std::cout, std::cerr);
}
