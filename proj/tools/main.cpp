#include "holomat/cli.hpp"

int main(int argc, char** argv) {
    return holomat::run_cli(argc, argv);
}
