#include <iostream>

#include "awcsp/cli.hpp"

int main(int argc, char** argv) {
    awcsp::cli::RunConfig config;
    config.caps = awcsp::Caps::from_env();
    if (auto code = awcsp::cli::parse(argc, argv, config, std::cout))
        return *code;
    return awcsp::cli::run(config, std::cout);
}
