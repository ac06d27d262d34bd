#include "cli.hpp"

int main(int argc, char** argv) {
    return bcminla::cli::run(argc, argv, std::cout, std::cerr);
}
