#include <iostream>
#include <string>
#include <vector>

#include "jtpos/cli.hpp"

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return jtpos::cli::run(args, std::cout, std::cerr);
}
