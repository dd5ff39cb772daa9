#include "archval/cli.hpp"

int main(int argc, char** argv) { return archval::run_cli(argc, argv); }
