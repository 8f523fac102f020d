#include <iostream>

#include "critgrp/cli.hpp"

int main(int argc, char** argv) {
    return critgrp::cli::run(argc, argv, std::cout, std::cerr);
}
