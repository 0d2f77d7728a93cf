#include <iostream>
#include <string>
#include <vector>

#include <richmult/cli.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return richmult::run_cli(args, std::cout, std::cerr);
}
