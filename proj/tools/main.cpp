#include "redinv/cli.hpp"

int main(int argc, char** argv) {
  return redinv::run_command({argv + 1, argv + argc});
}
