#include "cli.hpp"

int main(int argc, char** argv) { return symchar::cli::run(argc, argv); }
