#include <iostream>

#include "isodecomp/cli.hpp"

int main(int argc, char** argv)
{
    return isodecomp::run_command_line(argc, argv, std::cout, std::cerr);
}
