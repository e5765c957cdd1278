#include <string>
#include <vector>

#include "srnbench/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return srnbench::cli_main(std::move(args));
}
