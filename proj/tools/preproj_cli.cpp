#include "preproj/cli.hpp"

int main(int argc, char** argv) { return preproj::run_cli(argc, argv); }
