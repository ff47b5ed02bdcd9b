#include <iostream>

#include "explore/cli.hpp"

int main(int argc, char** argv) {
    return explore::cli::main(argc, argv, std::cout, std::cerr);
}
