#include <iostream>
#include <string>
#include <vector>

#include "thetadet/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    thetadet::CommandResult result = thetadet::run_command(args);
    (result.status == 0 ? std::cout : std::cerr) << result.out;
    return result.status;
}
