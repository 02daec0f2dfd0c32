#include "dc1lab/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    const auto result = dc1lab::cli::run(std::vector<std::string>(argv + 1, argv + argc));
    std::cout << result.out;
    std::cerr << result.err;
    return result.status;
}
