#include <iostream>

#include "pucv/cli.hpp"

int main(int argc, char** argv) {
    return pucv::run_cli(argc, argv, std::cout, std::cerr);
}
