#include <iostream>

#include "wangauth/cli/commands.hpp"

int main(int argc, char** argv)
{
    return wangauth::cli::run_cli(argc, argv, std::cout, std::cerr);
}
