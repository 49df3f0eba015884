#include "ogmirror/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return ogmirror::run_cli(argc, argv, std::cout, std::cerr);
}
