#include <iostream>

#include "drgkit/cli.hpp"

int main(int argc, char** argv) {
    return drgkit::run_cli(argc, argv, std::cout, std::cerr);
}
