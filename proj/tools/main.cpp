#include "scw/cli.hpp"

int main(int argc, char** argv) { return scw::cli::main(argc, argv); }
