#include "rrank/cli.hpp"

int main(int argc, char** argv) {
    return rrank::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
