#include "sgap/cli.hpp"

int main(int argc, char** argv) { return sgap::run_cli(argc, argv); }
