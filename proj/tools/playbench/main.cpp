// CLI entry point; subcommands are wired in as the modules land.
#include <cstdio>

int main() {
    std::puts("playbench: not wired yet");
    return 2;
}
