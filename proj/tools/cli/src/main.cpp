#include "cyclodyn_cli/commands.hpp"

int main(int argc, char** argv) { return cyclodyn::cli::run_cli(argc, argv); }
