#include <iostream>
#include <string>
#include <vector>

#include "akshar/cli.hpp"

int main(int argc, char** argv)
{
    std::ios::sync_with_stdio(false);
    return akshar::run_cli(std::vector<std::string>(argv, argv + argc), std::cin, std::cout, std::cerr);
}
