#include "gds/cli.hpp"

int main(int argc, char** argv) { return gds::cli::run(argc, argv); }
