#include <iostream>
#include <string>
#include <vector>

#include "extremal/cli.hpp"

int main(int argc, char** argv)
{
    return extremal::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
