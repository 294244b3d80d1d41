#include <gsym/cli.hpp>

int main(int argc, char **argv) { return gsym::runCli(argc, argv); }
