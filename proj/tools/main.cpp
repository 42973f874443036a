#include "ihsfuse/harness/commands.hpp"

int main(int argc, char** argv) { return ihsfuse::harness::run_cli(argc, argv); }
