#include "lf2hh/frontend/cli.hpp"

int main(int argc, char** argv) { return lf2hh::frontend::run(argc, argv); }
