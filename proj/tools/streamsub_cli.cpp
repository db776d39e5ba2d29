#include "streamsub/cli.hpp"

int main(int argc, char** argv) {
  return streamsub::run_cli({argv + 1, argv + argc});
}
