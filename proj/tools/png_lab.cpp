#include <cstdio>

int main() {
    std::puts("png_lab: CLI under construction");
    return 0;
}
