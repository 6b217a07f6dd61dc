#include <cstdio>

int main() {
    std::printf("acceptance suite pending\n");
    return 1;
}
