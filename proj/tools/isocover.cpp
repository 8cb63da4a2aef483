#include <iostream>

#include "isocover/cli.hpp"

int main(int argc, char** argv) {
    std::cout << std::unitbuf;
    return isocover::run_cli({argv, argv + argc}, std::cout, std::cerr);
}
