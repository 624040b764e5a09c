#include <iostream>

#include "flagcalc/cli.hpp"

int main(int argc, char** argv) {
    return flagcalc::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
