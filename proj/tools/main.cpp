#include "hyperent/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return hyperent::cli::main_entry({argv + 1, argv + argc}, std::cout, std::cerr);
}
