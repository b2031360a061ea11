#include <cstdio>

// Placeholder until the command-line driver lands.
int main() {
  std::puts("pbb: command-line driver not built yet");
  return 1;
}
