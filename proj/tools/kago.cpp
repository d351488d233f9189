#include <cstdio>
int main() { std::puts("kago cli placeholder"); return 0; }
