#include <flagc/cli.hpp>

int main(int argc, char** argv) {
    return flagc::cli::run(argc, argv, std::cout, std::cerr);
}
