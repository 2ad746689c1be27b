#include <cstdio>

int main() {
  std::puts("cgc: command-line interface not wired up yet");
  return 0;
}
