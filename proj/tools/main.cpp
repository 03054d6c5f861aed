#include <iostream>
#include <string>
#include <vector>

#include "mldist/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mldist::run(args, std::cout, std::cerr);
}
