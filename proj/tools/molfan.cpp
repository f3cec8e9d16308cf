#include "molfan/cli.hpp"

int main(int argc, char ** argv) { return molfan::cli::run(argc, argv); }
