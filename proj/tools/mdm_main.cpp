#include "mdm/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return mdm::run_cli(argc, argv, std::cout, std::cerr);
}
