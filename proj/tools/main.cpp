#include "groversim/cli.hpp"

int main(int argc, char** argv) { return groversim::cli::main(argc, argv); }
