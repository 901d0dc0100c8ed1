#include <iostream>

#include "dcc/cli.hpp"

int main(int argc, char** argv) {
    return dcc::cli::run(argc, argv, std::cout, std::cerr);
}
