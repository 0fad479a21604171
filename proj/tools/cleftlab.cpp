#include <vector>

#include "cleftlab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cleftlab::cli_run(args);
}
