#include "galmod/cli.hpp"

int main(int argc, char** argv) { return galmod::cli_main(argc, argv); }
