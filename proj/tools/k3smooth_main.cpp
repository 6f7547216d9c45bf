#include "k3smooth/cli.hpp"

int main(int argc, char** argv) { return k3smooth::run_cli(argc, argv); }
