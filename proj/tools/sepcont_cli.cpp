#include "cli.hpp"

int main(int argc, char** argv) { return sepcont::cli::run(argc, argv); }
