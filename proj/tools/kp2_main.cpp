#include "kp2/commands.hpp"

int main(int argc, char** argv) { return kp2::run_cli(argc, argv); }
