#include "indfam/cli.hpp"

int main(int argc, char** argv) { return indfam::cli_run(argc, argv); }
