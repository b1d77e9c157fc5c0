#include "wos/cli.hpp"

int main(int argc, char** argv) { return wos::cli::run_cli(argc, argv); }
