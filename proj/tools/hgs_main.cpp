#include "hgs/cli.hpp"

int main(int argc, char** argv) { return hgs::run_cli(argc, argv); }
