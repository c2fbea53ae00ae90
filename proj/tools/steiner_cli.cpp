#include <iostream>

#include "steiner/cli.hpp"

int main(int argc, char** argv) {
    return steiner::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
