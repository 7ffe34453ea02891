#include "casselman/cli.hpp"

int main(int argc, char** argv) { return casselman::run(argc, argv); }
