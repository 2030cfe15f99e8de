#include "ybe/cli_commands.hpp"

int main(int argc, char** argv) { return ybe::run_cli(argc, argv); }
