#include <string>
#include <vector>

#include "siegelab/run.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return siegelab::cli::run(args);
}
