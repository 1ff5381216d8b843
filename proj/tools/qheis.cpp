#include "qheis/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) {
    const qheis::cli::CommandResult result = qheis::cli::run({argv + 1, argv + argc});
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
