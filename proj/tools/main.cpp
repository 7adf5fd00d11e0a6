#include "cli.hpp"

int main(int argc, char** argv) { return fucik::cli::run(argc, argv); }
