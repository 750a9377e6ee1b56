#include "torus_echo/cli.hpp"

int main(int argc, char** argv) { return torus_echo::run(argc, argv); }
