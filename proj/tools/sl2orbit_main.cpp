#include <sl2orbit/cli.hpp>

int main(int argc, char** argv) { return sl2orbit::cli::dispatch(argc, argv); }
